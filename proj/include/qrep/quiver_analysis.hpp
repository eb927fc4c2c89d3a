#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qrep/cardinal.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

inline constexpr std::uint64_t kDefaultBudget = 200000;

enum class VerdictStatus { Exact, BudgetExhausted, UsedDeclaration };

std::string to_string(VerdictStatus s);

// A value together with how it was established.
template <class V>
struct Verdict {
  V value{};
  VerdictStatus status = VerdictStatus::Exact;
  std::set<Declaration> used;  // declarations relied upon
  std::uint64_t budget_used = 0;

  bool exact() const { return status == VerdictStatus::Exact; }
  bool certified() const { return status != VerdictStatus::BudgetExhausted; }
  std::string status_string() const;
};

template <class V>
std::string Verdict<V>::status_string() const {
  std::string s = to_string(status);
  if (status == VerdictStatus::UsedDeclaration) {
    s += "(";
    bool first = true;
    for (Declaration d : used) {
      if (!first) s += ",";
      s += to_string(d);
      first = false;
    }
    s += ")";
  }
  return s;
}

// Counts oracle calls and search expansions.
class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  bool charge(std::uint64_t n = 1) {
    used_ += n;
    return used_ <= limit_;
  }
  bool exhausted() const { return used_ > limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// A directed cycle through vertices lying on an i -> j route.
struct InfinitudeCertificate {
  std::vector<Vertex> cycle;
};

struct PathSet {
  std::vector<Path> paths;
  std::optional<InfinitudeCertificate> infinite;

  Cardinal cardinality() const {
    return infinite ? Cardinal::aleph0() : Cardinal::finite(paths.size());
  }
};

Verdict<PathSet> enumerate_paths(const Quiver& q, Vertex i, Vertex j,
                                 std::uint64_t budget = kDefaultBudget);

// All paths starting at i (right cone) or ending at i (left cone), grouped by
// the other endpoint and sorted with path_less.
struct Cone {
  std::map<Vertex, std::vector<Path>> paths;
  std::optional<InfinitudeCertificate> infinite;

  std::size_t total() const;
  const std::vector<Path>& at(Vertex v) const;
};

Verdict<Cone> right_cone(const Quiver& q, Vertex i, std::uint64_t budget = kDefaultBudget);
Verdict<Cone> left_cone(const Quiver& q, Vertex i, std::uint64_t budget = kDefaultBudget);

// Vertex sets reachable from (forward) or reaching (backward) a set.
Verdict<std::set<Vertex>> forward_closure(const Quiver& q, const std::set<Vertex>& from,
                                          std::uint64_t budget = kDefaultBudget);
Verdict<std::set<Vertex>> backward_closure(const Quiver& q, const std::set<Vertex>& to,
                                           std::uint64_t budget = kDefaultBudget);

enum class Invariant {
  lmcn, rmcn, mcn, lccn_i, rccn_i, lccn, rccn, ltccn, rtccn, ccn, tccn, rscn, lscn, alpha
};

std::string to_string(Invariant inv);
Invariant parse_invariant(const std::string& text);
std::vector<Invariant> all_invariants();
bool is_vertex_indexed(Invariant inv);

// Result carries a partial lower bound when the budget ran out.
Verdict<Cardinal> invariant(const Quiver& q, Invariant which, std::optional<Vertex> vertex = {},
                            std::uint64_t budget = kDefaultBudget);

enum class Side { Left, Right };

struct RootFiltration {
  Side side = Side::Left;
  std::vector<std::set<Vertex>> strata;
  bool converged = false;
  bool covers_all = false;
};

RootFiltration root_filtration(const Quiver& q, Side side, std::size_t max_steps = 1000);

enum class BoundarySide { Minus, Plus };

// S- (vertices outside S with a path into S) or S+ (with a path out of S).
Verdict<std::set<Vertex>> boundary(const Quiver& q, const std::set<Vertex>& s, BoundarySide side,
                                   std::uint64_t budget = kDefaultBudget);

struct Classification {
  std::map<std::string, Verdict<bool>> flags;
};

Classification classify(const Quiver& q, std::uint64_t budget = kDefaultBudget);

struct SubquiverFamily {
  Verdict<bool> in_F, in_B, in_T, in_FB, in_FT, in_FBT;
};

SubquiverFamily subquiver_family(const Quiver& q, const std::set<Vertex>& s,
                                 std::uint64_t budget = kDefaultBudget);

}  // namespace qrep
