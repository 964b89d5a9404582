#ifndef RAMSEY_ERRORS_HH
#define RAMSEY_ERRORS_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey
{
    /// Base of every error thrown by the library.
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Malformed textual input. offset is the byte position of the first bad byte.
    class ParseError : public Error
    {
        public:
            ParseError(const std::string & what, std::size_t offset) :
                Error(what + " at byte offset " + std::to_string(offset)),
                _offset(offset)
            {
            }

            auto offset() const -> std::size_t { return _offset; }

        private:
            std::size_t _offset;
    };

    /// An operation was called outside its domain (bad sizes, violated hypotheses).
    class PreconditionError : public Error
    {
        public:
            using Error::Error;
    };

    /// A hard node budget ran out in an operation that cannot return partial results.
    class BudgetExhausted : public Error
    {
        public:
            using Error::Error;
    };
}

#endif
