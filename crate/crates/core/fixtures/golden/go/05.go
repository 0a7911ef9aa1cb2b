package mini

func Filter(xs []int, limit int) []int {
	out := []int{}
	for _, x := range xs {
		if x < limit || x == 0 {
			out = append(out, x)
		}
	}
	return out
}

func Describe(n int) string {
	label := func(v int) string {
		if v > 0 {
			return "pos"
		}
		return "other"
	}
	return label(n)
}
