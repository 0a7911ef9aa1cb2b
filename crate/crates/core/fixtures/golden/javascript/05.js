const describe = function (n) {
  return n > 0 ? "pos" : "other";
};

function drain(queue) {
  let count = 0;
  while (queue.length > 0) {
    queue.pop();
    count++;
  }
  return count;
}
