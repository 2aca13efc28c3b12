#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpprism
{
    enum class ErrorKind
    {
        IndexOutOfRange,
        SelfLoop,
        GraphTooLarge,
        ProductTooLarge,
        DisconnectedGraph,
        UnreachablePair,
        TooManyOptima,
        NotApplicable,
        NotAGpSet,
        NotATree,
        NotSplit,
        NotABlockGraph,
        BadParameters,
        MalformedInput,
        UnsupportedSize,
        BadRange,
        Timeout
    };

    auto to_string(ErrorKind kind) -> std::string_view;

    /// Every failure raised by the library. The kind is stable and is what
    /// callers (and the Python bindings) dispatch on; the message is for humans.
    class Error : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            Error(ErrorKind kind, const std::string & message);

            auto kind() const noexcept -> ErrorKind;
    };

    [[noreturn]] auto fail(ErrorKind kind, const std::string & message) -> void;
}
