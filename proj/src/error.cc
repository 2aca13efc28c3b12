#include <gpprism/error.hh>

using namespace gpprism;

auto gpprism::to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::IndexOutOfRange:   return "IndexOutOfRange";
        case ErrorKind::SelfLoop:          return "SelfLoop";
        case ErrorKind::GraphTooLarge:     return "GraphTooLarge";
        case ErrorKind::ProductTooLarge:   return "ProductTooLarge";
        case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorKind::UnreachablePair:   return "UnreachablePair";
        case ErrorKind::TooManyOptima:     return "TooManyOptima";
        case ErrorKind::NotApplicable:     return "NotApplicable";
        case ErrorKind::NotAGpSet:         return "NotAGpSet";
        case ErrorKind::NotATree:          return "NotATree";
        case ErrorKind::NotSplit:          return "NotSplit";
        case ErrorKind::NotABlockGraph:    return "NotABlockGraph";
        case ErrorKind::BadParameters:     return "BadParameters";
        case ErrorKind::MalformedInput:    return "MalformedInput";
        case ErrorKind::UnsupportedSize:   return "UnsupportedSize";
        case ErrorKind::BadRange:          return "BadRange";
        case ErrorKind::Timeout:           return "Timeout";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & message) :
    std::runtime_error(std::string(to_string(kind)) + ": " + message),
    _kind(kind)
{
}

auto Error::kind() const noexcept -> ErrorKind
{
    return _kind;
}

auto gpprism::fail(ErrorKind kind, const std::string & message) -> void
{
    throw Error(kind, message);
}
