class Counter {
  constructor(start) {
    this.value = start;
  }

  addEvens(xs) {
    for (const x of xs) {
      if (x % 2 === 0) {
        this.value += x;
      }
    }
  }
}
