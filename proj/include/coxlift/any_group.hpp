#pragma once

#include <memory>
#include <variant>

#include "coxlift/groups/affine_symmetric.hpp"
#include "coxlift/groups/exceptional.hpp"
#include "coxlift/groups/signed.hpp"
#include "coxlift/groups/symmetric.hpp"

namespace coxlift {

/// One of the concrete realizations, chosen by label at run time. Use
/// std::visit to reach the typed API.
using AnyGroup = std::variant<SymmetricGroup, SignedPermutationGroup, ExceptionalGroup, AffineSymmetricGroup>;

inline AnyGroup make_group(const GroupLabel& label) {
  validate(label);
  switch (label.family) {
    case Family::A: return SymmetricGroup(label.rank);
    case Family::B:
    case Family::D: return SignedPermutationGroup(label.family, label.rank);
    case Family::E: return ExceptionalGroup(label.rank);
    case Family::AffineA: return AffineSymmetricGroup(label.rank);
  }
  throw InvalidArgument("unknown family");
}

}  // namespace coxlift
