package mini

func DayName(day int) string {
	switch day {
	case 0:
		return "sun"
	case 1:
		return "mon"
	case 2:
		return "tue"
	default:
		return "other"
	}
}
