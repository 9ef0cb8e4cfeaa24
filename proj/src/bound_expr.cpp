#include "chib/bound_expr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "chib/errors.hpp"

namespace chib {

struct BoundExpr::Node {
  Op op = Op::constant;
  std::optional<BigInt> value;
  double lg = 0;
  std::string name;
  std::vector<BoundExpr> children;
};

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log10_of(const BigInt& v) {
  if (v <= 0) return -kInf;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log10(mant) + static_cast<double>(exp) * std::log10(2.0);
}

const char* op_name(BoundExpr::Op op) {
  switch (op) {
    case BoundExpr::Op::constant: return "const";
    case BoundExpr::Op::add: return "add";
    case BoundExpr::Op::mul: return "mul";
    case BoundExpr::Op::pow: return "pow";
    case BoundExpr::Op::max: return "max";
    case BoundExpr::Op::label: return "label";
    case BoundExpr::Op::ladder: return "ladder";
  }
  return "?";
}

BoundExpr::Op op_from_name(const std::string& s) {
  static const std::unordered_map<std::string, BoundExpr::Op> table{
      {"const", BoundExpr::Op::constant}, {"add", BoundExpr::Op::add},       {"mul", BoundExpr::Op::mul},
      {"pow", BoundExpr::Op::pow},        {"max", BoundExpr::Op::max},       {"label", BoundExpr::Op::label},
      {"ladder", BoundExpr::Op::ladder}};
  auto it = table.find(s);
  if (it == table.end()) throw ParseError("bound tree: unknown op '" + s + "'");
  return it->second;
}

void visit_unique(const BoundExpr& root, const std::function<void(const BoundExpr&)>& fn) {
  std::unordered_set<const void*> seen;
  std::vector<BoundExpr> stack{root};
  while (!stack.empty()) {
    BoundExpr e = stack.back();
    stack.pop_back();
    if (!seen.insert(e.node_id()).second) continue;
    fn(e);
    for (const auto& c : e.children()) stack.push_back(c);
  }
}

}  // namespace

BoundExpr::BoundExpr() : node_(std::make_shared<Node>(Node{Op::constant, BigInt(0), -kInf, {}, {}})) {}

BoundExpr::Op BoundExpr::op() const noexcept { return node_->op; }
bool BoundExpr::exact() const noexcept { return node_->value.has_value(); }
const BigInt& BoundExpr::value() const {
  if (!node_->value) throw std::logic_error("bound expression is symbolic");
  return *node_->value;
}
double BoundExpr::log10() const noexcept { return node_->lg; }
const std::string& BoundExpr::name() const noexcept { return node_->name; }
const std::vector<BoundExpr>& BoundExpr::children() const noexcept { return node_->children; }

std::size_t BoundExpr::node_count() const {
  std::size_t n = 0;
  visit_unique(*this, [&](const BoundExpr&) { ++n; });
  return n;
}

std::size_t BoundExpr::count_named(std::string_view name) const {
  std::size_t n = 0;
  visit_unique(*this, [&](const BoundExpr& e) {
    if (e.name() == name) ++n;
  });
  return n;
}

std::size_t BoundExpr::digits() const {
  const BigInt& v = value();
  if (v == 0) return 1;
  return v.get_str().size();
}

std::string BoundExpr::summary() const {
  if (exact()) return value().get_str();
  std::ostringstream out;
  out << "symbolic(nodes=" << node_count() << ", log10~";
  if (std::isinf(log10())) {
    out << "unknown";
  } else {
    out << log10();
  }
  out << ")";
  return out.str();
}

nlohmann::json BoundExpr::to_json() const {
  // Post-order node table; children reference earlier ids.
  std::unordered_map<const Node*, std::size_t> ids;
  nlohmann::json nodes = nlohmann::json::array();
  std::function<std::size_t(const BoundExpr&)> emit = [&](const BoundExpr& e) -> std::size_t {
    if (auto it = ids.find(e.node_.get()); it != ids.end()) return it->second;
    std::vector<std::size_t> kids;
    for (const auto& c : e.children()) kids.push_back(emit(c));
    nlohmann::json n;
    n["op"] = op_name(e.op());
    if (!e.name().empty()) n["name"] = e.name();
    if (!kids.empty()) n["children"] = kids;
    n["value"] = e.exact() ? nlohmann::json(e.value().get_str()) : nlohmann::json(nullptr);
    n["log10"] = std::isfinite(e.log10()) ? nlohmann::json(e.log10()) : nlohmann::json(nullptr);
    std::size_t id = nodes.size();
    nodes.push_back(std::move(n));
    ids.emplace(e.node_.get(), id);
    return id;
  };
  std::size_t root = emit(*this);
  return {{"kind", "bound_expr"}, {"root", root}, {"nodes", std::move(nodes)}};
}

BoundExpr BoundExpr::from_json(const nlohmann::json& j) {
  try {
    const auto& nodes = j.at("nodes");
    std::vector<BoundExpr> built;
    built.reserve(nodes.size());
    for (const auto& n : nodes) {
      auto node = std::make_shared<Node>();
      node->op = op_from_name(n.at("op").get<std::string>());
      if (n.contains("name")) node->name = n.at("name").get<std::string>();
      if (n.contains("children")) {
        for (std::size_t c : n.at("children").get<std::vector<std::size_t>>()) {
          if (c >= built.size()) throw ParseError("bound tree: child id " + std::to_string(c) + " not yet defined");
          node->children.push_back(built[c]);
        }
      }
      const auto& v = n.at("value");
      if (!v.is_null()) {
        BigInt value;
        if (value.set_str(v.get<std::string>(), 10) != 0 || value < 0) {
          throw ParseError("bound tree: bad value '" + v.get<std::string>() + "'");
        }
        node->value = value;
      }
      const auto& lg = n.at("log10");
      node->lg = lg.is_null() ? (node->value && *node->value == 0 ? -kInf : kInf) : lg.get<double>();
      built.push_back(BoundExpr(std::move(node)));
    }
    std::size_t root = j.at("root").get<std::size_t>();
    if (root >= built.size()) throw ParseError("bound tree: root id out of range");
    return built[root];
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bound tree: ") + e.what());
  }
}

bool structurally_equal(const BoundExpr& a, const BoundExpr& b) {
  if (a.same_node(b)) return true;
  if (a.op() != b.op() || a.name() != b.name() || a.exact() != b.exact()) return false;
  if (a.exact() && a.value() != b.value()) return false;
  if (a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!structurally_equal(a.children()[i], b.children()[i])) return false;
  return true;
}

bool less_than(long long x, const BoundExpr& b) {
  if (!b.exact()) return true;
  return BigInt(std::to_string(x)) < b.value();
}

bool at_most(const BoundExpr& b, long long x) { return !less_than(x, b); }

BoundBuilder::BoundBuilder(std::size_t digit_budget) : budget_(std::max<std::size_t>(digit_budget, 20)) {}

BoundExpr BoundBuilder::constant(const BigInt& v) const {
  if (v < 0) throw InputError("bound constants are nonnegative");
  auto node = std::make_shared<BoundExpr::Node>();
  node->op = BoundExpr::Op::constant;
  node->value = v;
  node->lg = log10_of(v);
  return BoundExpr(std::move(node));
}

BoundExpr BoundBuilder::add(const BoundExpr& a, const BoundExpr& b) const {
  auto node = std::make_shared<BoundExpr::Node>();
  node->op = BoundExpr::Op::add;
  node->children = {a, b};
  double hi = std::max(a.log10(), b.log10());
  node->lg = hi + std::log10(2.0);
  if (a.exact() && b.exact() && hi + 1 <= static_cast<double>(budget_)) {
    node->value = a.value() + b.value();
    node->lg = log10_of(*node->value);
  }
  return BoundExpr(std::move(node));
}

BoundExpr BoundBuilder::mul(const BoundExpr& a, const BoundExpr& b) const {
  auto node = std::make_shared<BoundExpr::Node>();
  node->op = BoundExpr::Op::mul;
  node->children = {a, b};
  bool zero = (a.exact() && a.value() == 0) || (b.exact() && b.value() == 0);
  node->lg = zero ? -kInf : a.log10() + b.log10();
  if (zero) {
    node->value = BigInt(0);
  } else if (a.exact() && b.exact() && node->lg <= static_cast<double>(budget_)) {
    node->value = a.value() * b.value();
    node->lg = log10_of(*node->value);
  }
  return BoundExpr(std::move(node));
}

BoundExpr BoundBuilder::pow(const BoundExpr& base, const BoundExpr& exponent) const {
  auto node = std::make_shared<BoundExpr::Node>();
  node->op = BoundExpr::Op::pow;
  node->children = {base, exponent};
  if (exponent.exact() && exponent.value() == 0) {
    node->value = BigInt(1);
  } else if (base.exact() && base.value() <= 1) {
    node->value = base.value();
  }
  if (node->value) {
    node->lg = log10_of(*node->value);
    return BoundExpr(std::move(node));
  }
  double lb = base.log10();
  if (exponent.exact()) {
    node->lg = exponent.value().get_d() * lb;
  } else {
    double le = exponent.log10();
    node->lg = le > 300 ? kInf : std::pow(10.0, le) * lb;
  }
  if (base.exact() && exponent.exact() && node->lg <= static_cast<double>(budget_) && exponent.value().fits_ulong_p()) {
    BigInt v;
    mpz_pow_ui(v.get_mpz_t(), base.value().get_mpz_t(), exponent.value().get_ui());
    node->value = std::move(v);
    node->lg = log10_of(*node->value);
  }
  return BoundExpr(std::move(node));
}

BoundExpr BoundBuilder::max(const BoundExpr& a, const BoundExpr& b) const {
  auto node = std::make_shared<BoundExpr::Node>();
  node->op = BoundExpr::Op::max;
  node->children = {a, b};
  node->lg = std::max(a.log10(), b.log10());
  if (a.exact() && b.exact()) node->value = std::max(a.value(), b.value());
  return BoundExpr(std::move(node));
}

BoundExpr BoundBuilder::label(std::string name, const BoundExpr& inner) const {
  auto node = std::make_shared<BoundExpr::Node>();
  node->op = BoundExpr::Op::label;
  node->name = std::move(name);
  node->children = {inner};
  node->lg = inner.log10();
  if (inner.exact()) node->value = inner.value();
  return BoundExpr(std::move(node));
}

BoundExpr BoundBuilder::ladder(std::string name, std::vector<BoundExpr> params) const {
  auto node = std::make_shared<BoundExpr::Node>();
  node->op = BoundExpr::Op::ladder;
  node->name = std::move(name);
  node->children = std::move(params);
  node->lg = kInf;
  return BoundExpr(std::move(node));
}

}  // namespace chib
