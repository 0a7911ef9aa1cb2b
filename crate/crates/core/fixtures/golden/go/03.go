package mini

type Counter struct {
	total int
}

func (c *Counter) AddEvens(xs []int) {
	for _, x := range xs {
		if x%2 == 0 {
			c.total += x
		}
	}
}

func Identity(x int) int {
	return x
}
