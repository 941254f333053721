#include "mengoli/eval_result.hpp"

namespace mengoli {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Prop11: return "Prop11";
        case Method::Prop12: return "Prop12";
        case Method::Prop13: return "Prop13";
        case Method::Prop14: return "Prop14";
        case Method::DigammaRecurrence: return "DigammaRecurrence";
        case Method::PartialFractions: return "PartialFractions";
        case Method::ClosedForm: return "ClosedForm";
        case Method::Oracle: return "Oracle";
    }
    return "Unknown";
}

}  // namespace mengoli
