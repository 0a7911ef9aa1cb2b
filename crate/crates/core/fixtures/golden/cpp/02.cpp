class Counter {
public:
    Counter() : value_(0) {}

    void add(int delta) {
        if (delta > 0) {
            value_ += delta;
        }
    }

    int value() const {
        return value_;
    }

private:
    int value_;
};
