package mini

func BothPositive(a int, b int) bool {
	if a > 0 && b > 0 {
		return true
	}
	return false
}
