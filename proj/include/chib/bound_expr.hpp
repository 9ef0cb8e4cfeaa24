#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace chib {

using BigInt = mpz_class;

// Nonnegative integer constant: exact when it fits the digit budget it was built under,
// otherwise a symbolic node over its operands. Nodes are shared, so a tree is a DAG.
class BoundExpr {
 public:
  enum class Op { constant, add, mul, pow, max, label, ladder };

  BoundExpr();  // the constant 0

  Op op() const noexcept;
  bool exact() const noexcept;
  // Throws std::logic_error on symbolic nodes.
  const BigInt& value() const;
  // log10 of the value: exact for constants, an estimate otherwise; +inf when unknown.
  double log10() const noexcept;
  // Label / ladder name; empty for arithmetic nodes.
  const std::string& name() const noexcept;
  const std::vector<BoundExpr>& children() const noexcept;

  std::size_t node_count() const;
  std::size_t count_named(std::string_view name) const;
  // Decimal digits of an exact value.
  std::size_t digits() const;
  // Decimal value when exact, else "symbolic(nodes=N, log10~X)".
  std::string summary() const;
  std::string to_decimal() const { return value().get_str(); }

  // Same shared node.
  bool same_node(const BoundExpr& other) const noexcept { return node_ == other.node_; }
  const void* node_id() const noexcept { return node_.get(); }

  nlohmann::json to_json() const;
  static BoundExpr from_json(const nlohmann::json& j);

  struct Node;

 private:
  friend class BoundBuilder;
  explicit BoundExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Structural equality: same ops, names, values and shapes.
bool structurally_equal(const BoundExpr& a, const BoundExpr& b);

// Ordering against an ordinary integer. Symbolic values are treated as larger than any
// 64-bit integer (the digit budget is at least 20).
bool less_than(long long x, const BoundExpr& b);
bool at_most(const BoundExpr& b, long long x);

// Builds nodes under a fixed decimal-digit budget.
class BoundBuilder {
 public:
  explicit BoundBuilder(std::size_t digit_budget = 1'000'000);

  std::size_t digit_budget() const noexcept { return budget_; }

  BoundExpr constant(const BigInt& v) const;
  BoundExpr constant(unsigned long v) const { return constant(BigInt(v)); }
  BoundExpr add(const BoundExpr& a, const BoundExpr& b) const;
  BoundExpr mul(const BoundExpr& a, const BoundExpr& b) const;
  BoundExpr pow(const BoundExpr& base, const BoundExpr& exponent) const;
  BoundExpr max(const BoundExpr& a, const BoundExpr& b) const;
  // A named alias for `inner`; carries its value.
  BoundExpr label(std::string name, const BoundExpr& inner) const;
  // A named recurrence that is not expanded; params are recorded as children.
  BoundExpr ladder(std::string name, std::vector<BoundExpr> params) const;

 private:
  std::size_t budget_;
};

}  // namespace chib
