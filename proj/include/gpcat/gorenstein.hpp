#pragma once

// Membership tests with certificates: Gorenstein P-projectives for the
// adjunction i_! -| i^* of a representation category B^C, monic
// representations, Gorenstein projectives in the base and in B^C.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpcat/nakayama.hpp"

namespace gpcat {

using json = nlohmann::json;

enum class Member { yes, no, inconclusive };
std::string to_string(Member m);

struct Verdict {
  Member member = Member::inconclusive;
  std::string route;
  std::string label;
  json certificate = json::object();
  json hypotheses = json::object();

  json to_json() const;
};

/// Conjunction: no beats inconclusive beats yes.
Member meet(Member a, Member b);

struct BaseProfile {
  enum class Status { computed, declared, unknown };
  CategoryPtr base;
  Status status = Status::unknown;
  std::optional<std::size_t> g;
  std::size_t cutoff = 0;
  /// sup pdim of D(base) on each side, when computed.
  Bounded left;
  Bounded right;

  static BaseProfile declared(CategoryPtr base, std::size_t g);
  json to_json() const;
};

BaseProfile self_injective_dimension(CategoryPtr base, std::size_t cutoff);

enum class GprojRoute { automatic, shortcut, full };
std::string to_string(GprojRoute r);

Verdict is_gproj_P(const Nakayama& nk, const Representation& f, GprojRoute route = GprojRoute::automatic);
Verdict is_monic(const Representation& f);
Verdict base_gp(const Module& b, const BaseProfile& profile, std::size_t cutoff);
Verdict is_gp_functor(const Nakayama& nk, const Representation& f, const BaseProfile& profile);

enum class XClass { gproj_P, P_proj };
enum class FClass { gp, proj };
XClass x_class_from_name(const std::string& s);
FClass f_class_from_name(const std::string& s);
std::string to_string(XClass x);
std::string to_string(FClass f);

/// Whether the counit i_! i^* F -> F splits; returns the section when it does.
std::optional<ModuleMap> p_projective_section(const Nakayama& nk, const Representation& f);
Verdict lifted_class_membership(const Nakayama& nk, const Representation& f, XClass x, FClass fc, const BaseProfile& profile);

struct GpResolutionDimension {
  Member status = Member::yes;
  /// First stage whose syzygy is a member; "≥cutoff" when none was found.
  Bounded value;
  json stages = json::array();
  std::string to_string() const;
};
GpResolutionDimension gp_resolution_dimension(const Nakayama& nk, const Representation& f, const BaseProfile& profile);

/// Image and kernel dimensions of every loop, on F and on nu F.
json loop_exactness(const Nakayama& nk, const Representation& f);

struct DiscrepancyResult {
  Verdict first;
  Verdict second;
  /// Member under exactly one of the two factorizations.
  bool witness = false;
  json to_json() const;
};
/// `first` and `second` present the same module over C1 (x) C2 and C2 (x) C1.
DiscrepancyResult discrepancy_probe(const Representation& first, const Representation& second, std::size_t cutoff);

struct WindowRecord {
  bool exact = false;
  bool hom_exact = false;
  std::vector<std::vector<std::size_t>> term_dims;
  json to_json() const;
};
/// Complex of projective T-modules P_{n-1} -> ... -> P_0 -> P^0 -> ... -> P^{n-1}
/// through F, with P^j -> P^{j+1} built from left approximations by free modules.
WindowRecord totally_acyclic_window(const Module& f, std::size_t n);

/// All modules with dims bounded objectwise, over a prime field; every dimension
/// vector below the bound, arrow matrices in odometer order.
class Enumerator {
 public:
  static constexpr std::size_t default_limit = std::size_t(1) << 22;
  Enumerator(CategoryPtr c, std::vector<std::size_t> bounds, std::size_t limit = default_limit);
  /// Next module satisfying the relations; empty when exhausted.
  std::optional<Module> next();
  void restart();
  std::size_t raw_size() const { return raw_size_; }

 private:
  bool advance_dims();
  void start_dims();
  bool advance_entries();
  std::optional<Module> current() const;

  CategoryPtr c_;
  std::vector<std::size_t> bounds_;
  std::uint32_t p_;
  std::size_t raw_size_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<std::uint32_t> entries_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Module> enumerate_representations(CategoryPtr c, const std::vector<std::size_t>& bounds,
                                              std::size_t limit = Enumerator::default_limit);

}  // namespace gpcat
