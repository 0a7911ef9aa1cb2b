function bothPositive(a, b) {
  if (a > 0 && b > 0) {
    return true;
  }
  return false;
}
