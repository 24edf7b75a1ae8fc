#include "knc/errors.hpp"

namespace knc {

const char* to_string(CurveDefect d) {
    switch (d) {
        case CurveDefect::DuplicateRoot: return "duplicate_root";
        case CurveDefect::ZeroRoot: return "zero_root";
        case CurveDefect::OddRootCount: return "odd_root_count";
        case CurveDefect::RootCollision: return "root_collision";
        case CurveDefect::Empty: return "empty_root_list";
    }
    return "invalid_curve";
}

}  // namespace knc
