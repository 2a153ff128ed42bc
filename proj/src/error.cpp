#include "cpath/error.hpp"

namespace cpath {

const char* errorCodeName(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse:
            return "parse";
        case ErrorCode::Coherence:
            return "coherence";
        case ErrorCode::Fuel:
            return "fuel";
        case ErrorCode::Uninhabited:
            return "uninhabited";
        case ErrorCode::Position:
            return "position";
        case ErrorCode::Precondition:
            return "precondition";
        case ErrorCode::Contract:
            return "contract";
        case ErrorCode::NonCanonical:
            return "non-canonical";
    }
    return "error";
}

}  // namespace cpath
