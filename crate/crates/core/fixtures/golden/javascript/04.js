function label(kind, fallback) {
  switch (kind) {
    case 0:
      return "zero";
    case 1:
      return "one";
    default:
      return fallback ?? "none";
  }
}
