#pragma once

#include <string>
#include <utility>

#include "padic/exponent.hpp"
#include "padic/operator.hpp"
#include "padic/vector.hpp"

namespace padic {

/// The inequality and identity checks. HRS_i..HRS_vi are the six
/// uncertainty-product bounds, MP_plus/MP_minus the two orthogonal-witness
/// bounds, IDENT_ii the exact expansion identity behind HRS_ii, and the
/// NOTE checks the two self-adjoint expectation identities
/// <[A,B]x,x> = 0 and <{A,B}x,x> = 2<ABx,x>.
enum class CheckId {
    hrs_i,
    hrs_ii,
    hrs_iii,
    hrs_iv,
    hrs_v,
    hrs_vi,
    mp_plus,
    mp_minus,
    ident_ii,
    note_comm_zero,
    note_anticomm_double,
};

std::string to_string(CheckId id);
CheckId check_id_from_string(const std::string& name);

/// Outcome of one check on one instance. Both sides are recorded as
/// magnitude exponents; holds means rhs <= lhs in the exponent order.
/// For the identity checks lhs is the zero magnitude and rhs the magnitude
/// of the difference of the two sides, so holds still reads rhs <= lhs.
/// tight means lhs = rhs; degenerate marks vacuous instances (both sides
/// zero, or a zero witness for the MP checks). The seed string reproduces
/// the instance.
struct Verdict {
    CheckId check;
    Exponent lhs = Exponent::neg_infinity();
    Exponent rhs = Exponent::neg_infinity();
    bool holds = false;
    bool tight = false;
    bool degenerate = false;
    std::string seed;
};

/// <A x, x> — the expectation of A at x.
Rational expectation(const POperator& a, const PVector& x);

/// A x - <A x, x> x, the component of A x not along x.
PVector residual(const POperator& a, const PVector& x);

/// Uncertainty of A at x: the norm of the residual. Requires
/// inner(x, x) = 1 and x in the domain of A.
Exponent delta(const POperator& a, const PVector& x);

/// Product bound: Delta(A) Delta(B) >= |<Ax,Bx> - <Ax,x><Bx,x>|.
Verdict check_hrs_i(const POperator& a, const POperator& b, const PVector& x,
                    std::string seed = {});

/// Commutator/anticommutator bound for self-adjoint A, B:
/// max{Delta(A), Delta(B)} >= sqrt|Q| / sqrt|2| with
/// Q = <[A,B]x,x>^2 + (<{A,B}x,x> - 2<Ax,x><Bx,x>)^2.
Verdict check_hrs_ii(const POperator& a, const POperator& b, const PVector& x,
                     std::string seed = {});

/// Exact expansion identity behind the HRS_ii bound; holds for arbitrary
/// (not necessarily self-adjoint) A, B:
/// Q = 2(<ABx,x> - <Ax,x><Bx,x>)^2 + 2(<BAx,x> - <Ax,x><Bx,x>)^2.
Verdict check_identity_ii(const POperator& a, const POperator& b, const PVector& x,
                          std::string seed = {});

/// Sum-of-squares bound for adjointable A, B:
/// max >= sqrt|<(A*A+B*B)x,x> - (<(A+B)x,x>^2 + <(A-B)x,x>^2)/2|.
Verdict check_hrs_iii(const POperator& a, const POperator& b, const PVector& x,
                      std::string seed = {});

/// Difference-of-squares bound for adjointable A, B:
/// max >= sqrt|<(A*A-B*B)x,x> - <(A+B)x,x><(A-B)x,x>|.
Verdict check_hrs_iv(const POperator& a, const POperator& b, const PVector& x,
                     std::string seed = {});

/// Sum bound: max >= sqrt|<(A+B)x,(A+B)x> - <(A+B)x,x>^2|.
Verdict check_hrs_v(const POperator& a, const POperator& b, const PVector& x,
                    std::string seed = {});

/// Difference bound: max >= sqrt|<(A-B)x,(A-B)x> - <(A-B)x,x>^2|.
Verdict check_hrs_vi(const POperator& a, const POperator& b, const PVector& x,
                     std::string seed = {});

enum class MpSign { plus, minus };

/// Orthogonal-witness bound: max{Delta(A), Delta(B)} >= |<(A±B)x, y>| for
/// any y with norm(y) <= 1 and inner(x, y) = 0. A witness violating those
/// constraints raises hypothesis_error rather than producing a verdict.
Verdict check_mp(const POperator& a, const POperator& b, const PVector& x, const PVector& y,
                 MpSign sign, std::string seed = {});

/// The two expectation identities for self-adjoint A, B, in order
/// (NOTE_comm_zero, NOTE_anticomm_double).
std::pair<Verdict, Verdict> check_notes(const POperator& a, const POperator& b, const PVector& x,
                                        std::string seed = {});

} // namespace padic
