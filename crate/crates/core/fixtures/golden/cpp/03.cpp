#include <stdexcept>

class Parser {
public:
    int parse(const char *text);
};

int Parser::parse(const char *text) {
    try {
        if (!text) {
            throw std::runtime_error("null");
        }
        return 0;
    } catch (const std::exception &e) {
        return -1;
    }
}
