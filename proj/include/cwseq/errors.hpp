#ifndef CWSEQ_ERRORS_HPP
#define CWSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cwseq {

/// Mismatched lengths or alphabets between two sequences.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value outside its admissible range (symbol, index, parameter).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Information length k is not a power of the alphabet size q.
struct UnsupportedLength : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// No weighting index can reach the requested codeword weight for this input.
struct WeightUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decoded prefix index falls outside the weighting-sequence range [0, kq).
struct InvalidPrefix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exhaustive sweep would exceed the configured work cap.
struct ResourceCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cwseq

#endif  // CWSEQ_ERRORS_HPP
