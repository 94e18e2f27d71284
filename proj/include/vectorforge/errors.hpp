#pragma once

#include <stdexcept>
#include <string>

namespace vectorforge {

// Missing or unreadable file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File exists but is not a supported / well-formed image.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An edge point of the subpixel boundary image could not be assigned to a piece.
class TopologyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A region's boundary pieces do not close into loops.
class ChainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace vectorforge
