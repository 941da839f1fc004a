#pragma once

// Invariant functions on E_nu^F stored orbit by orbit, the induction and
// restriction operators, and the rescaling Phi onto the Hall algebra.

#include <map>
#include <utility>
#include <vector>

#include "hallq/algebra.hpp"

namespace hallq::fn {

using algebra::HallCoeff;
using algebra::HallElement;
using algebra::TensorElement;
using hall::ModuleClass;
using hall::Workbench;
using quiver::DimVector;

struct InvFunction {
  DimVector dim;
  std::vector<HallCoeff> values;  // per orbit id

  static InvFunction zero(Workbench& wb, const DimVector& nu);
  static InvFunction indicator(Workbench& wb, const ModuleClass& M);
  friend bool operator==(const InvFunction&, const InvFunction&) = default;
};

// A function on E_first^F x E_second^F, constant on orbit pairs.
struct TensorFunction {
  DimVector first;
  DimVector second;
  std::size_t num_second = 0;
  std::vector<HallCoeff> values;  // [M * num_second + N]

  static TensorFunction zero(Workbench& wb, const DimVector& first, const DimVector& second);
  HallCoeff& at(std::uint32_t M, std::uint32_t N) { return values[static_cast<std::size_t>(M) * num_second + N]; }
  const HallCoeff& at(std::uint32_t M, std::uint32_t N) const { return values[static_cast<std::size_t>(M) * num_second + N]; }
  friend bool operator==(const TensorFunction&, const TensorFunction&) = default;
};

// One tensor function per splitting (first, second) of a grading.
using TensorFamily = std::map<std::pair<DimVector, DimVector>, TensorFunction>;

// f on the quotient grading, g on the submodule grading.
InvFunction ind_fn(Workbench& wb, const InvFunction& f, const InvFunction& g);
// The same through literal enumeration of (W, rho1, rho2); tiny groups only.
InvFunction ind_fn_flags(Workbench& wb, const InvFunction& f, const InvFunction& g);
// Unnormalised W-sum: raw(x) / (|G'^F| |G''^F|) for each orbit, as exact values.
InvFunction ind_fn_raw_over_group(Workbench& wb, const InvFunction& f, const InvFunction& g);

// Restriction to the splitting first + second = dim f, by enumerating the
// extension blocks of every pair of orbit representatives.
TensorFunction res_fn(Workbench& wb, const InvFunction& f, const DimVector& first, const DimVector& second);
// res over every splitting.
TensorFamily delta_fn(Workbench& wb, const InvFunction& f);
// Twisted product of two families: the (a1, a2) x (b1, b2) piece lands in
// (a1 + b1, a2 + b2) with the factor v^{(a2, b1)}.
TensorFamily tensor_ind(Workbench& wb, const TensorFamily& s, const TensorFamily& t);

HallElement phi(Workbench& wb, const InvFunction& f);
TensorElement phi_tensor(Workbench& wb, const TensorFunction& t);
TensorElement phi_family(Workbench& wb, const TensorFamily& fam);

template <class T>
struct Sides {
  T lhs;
  T rhs;
  bool holds() const { return lhs == rhs; }
};

// Phi(ind(1_M, 1_N)) against Phi(1_M) Phi(1_N).
Sides<HallElement> phi_mult(Workbench& wb, const ModuleClass& M, const ModuleClass& N);
// (Phi x Phi)(Delta~ 1_L) against Delta(Phi(1_L)).
Sides<TensorElement> phi_comult(Workbench& wb, const ModuleClass& L);
// Delta~(1_M * 1_N) against Delta~(1_M) * Delta~(1_N), both pushed through
// Phi x Phi so they can be compared as tensor elements.
Sides<TensorElement> green_fn(Workbench& wb, const ModuleClass& M, const ModuleClass& N);
bool green_fn_check(Workbench& wb, const ModuleClass& M, const ModuleClass& N);

// res(1_L) at (M, N) against v^{3 sum_i a_i b_i - sum_h a_s b_t} |Ext^1(M,N)_L| / |Hom(M,N)|.
Sides<HallCoeff> res_indicator(Workbench& wb, const ModuleClass& L, const ModuleClass& M, const ModuleClass& N);

}  // namespace hallq::fn
