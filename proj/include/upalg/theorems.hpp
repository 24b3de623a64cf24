#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "upalg/checklist.hpp"
#include "upalg/congruence.hpp"
#include "upalg/morphism.hpp"
#include "upalg/substruct.hpp"

namespace upalg {

enum class Theorem { Fundamental, First, Second, Third, Fourth };

/// "FUND", "ISO1", ... as used in the line format.
std::string_view theorem_tag(Theorem t) noexcept;

/// Record of one verified theorem instance.
struct Certificate {
  Theorem theorem = Theorem::Fundamental;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> constructed;
  Checklist checklist;

  bool passed() const noexcept { return checklist.all_passed(); }
};

/// Raised instead of returning a certificate with a failed claim.  The
/// partial certificate is kept for reporting.
class CertificateFailure : public Error {
 public:
  explicit CertificateFailure(Certificate cert);
  Certificate const& certificate() const noexcept { return cert_; }
  Claim const& claim() const noexcept { return *cert_.checklist.first_failure(); }

 private:
  Certificate cert_;
};

/// One line per claim: "PASS|FAIL <theorem> <claim-id> <details>".
void write_certificate_lines(std::ostream& out, Certificate const& cert);
/// Human-readable form: inputs, constructed objects, then the checklist.
void write_certificate_report(std::ostream& out, Certificate const& cert);

/// Above this many candidate maps the uniqueness of the induced map is
/// argued pointwise instead of by enumerating homomorphisms.
inline constexpr double kUniquenessEnumerationLimit = 5e6;

/// The factorisation f = φ ∘ π through A/~Ker(f).
struct Factorization {
  QuotientAlgebra quotient;
  Morphism projection;
  Morphism induced;  // φ
};

/// Builds the factorisation without checking any claim beyond what the
/// constructors enforce.  Throws on a non-ideal kernel or a non-hom φ.
Factorization factor_through_kernel(Morphism const& f);

Certificate fundamental(Morphism const& f);
Certificate first_iso(Morphism const& f);

/// Union of the ~K-classes of the members of H, checked to be a subalgebra.
SubalgebraSet hk_set(SubalgebraSet const& h, IdealSet const& k);

Certificate second_iso(SubalgebraSet const& h, IdealSet const& k);
/// Throws PreconditionViolation unless inner ⊆ outer.
Certificate third_iso(IdealSet const& inner, IdealSet const& outer);
/// Throws NotSurjective unless f is onto.
Certificate fourth_iso(Morphism const& f);

}  // namespace upalg
