#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arrowhead {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutOfGrid : public Error {
public:
    using Error::Error;
};

/// Raised for orders below 2, which have no generator pattern worth the name.
class DegenerateOrder : public Error {
public:
    explicit DegenerateOrder(int order);
    int order() const { return order_; }

private:
    int order_;
};

/// A transformation-table lookup hit a forbidden (a, b) cell.
class BlockedPair : public Error {
public:
    BlockedPair(std::size_t index, int first, int second);

    std::size_t index() const { return index_; }
    int first() const { return first_; }
    int second() const { return second_; }

private:
    std::size_t index_;
    int first_;
    int second_;
};

class SizeGuard : public Error {
public:
    SizeGuard(unsigned long long requested, unsigned long long cap);
};

class EmptyPolyline : public Error {
public:
    EmptyPolyline() : Error("cannot render an empty polyline") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace arrowhead
