#include "polar/slp.hpp"

#include <optional>

namespace polar {

Slp::Slp(std::size_t n_vars, std::vector<SlpNode> nodes, std::vector<std::size_t> outputs)
    : n_vars_(n_vars), nodes_(std::move(nodes)), outputs_(std::move(outputs)) {
  if (outputs_.empty()) throw InvalidArgument("SLP needs at least one output");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    switch (n.op) {
      case SlpOp::Input:
        if (n.lhs >= n_vars_) {
          throw InvalidArgument("SLP node " + std::to_string(i) + " reads input " +
                                std::to_string(n.lhs) + " of " + std::to_string(n_vars_));
        }
        break;
      case SlpOp::Constant: break;
      case SlpOp::Add:
      case SlpOp::Sub:
      case SlpOp::Mul:
        if (n.lhs >= i || n.rhs >= i) {
          throw InvalidArgument("SLP node " + std::to_string(i) +
                                " refers to a later node");
        }
        break;
    }
  }
  for (std::size_t o : outputs_) {
    if (o >= nodes_.size()) throw InvalidArgument("SLP output out of range");
  }
}

std::vector<Rational> Slp::evaluate(std::span<const Rational> point) const {
  return evaluate(RationalRing{}, point);
}

SlpMetrics slp_metrics(const Slp& s) {
  SlpMetrics m;
  const auto& nodes = s.nodes();
  m.total_size = nodes.size();
  for (const auto& n : nodes) {
    if (n.op == SlpOp::Mul && nodes[n.lhs].op != SlpOp::Constant &&
        nodes[n.rhs].op != SlpOp::Constant) {
      ++m.nonscalar_size;
    }
  }
  return m;
}

SlpBuilder::SlpBuilder(std::size_t n_vars) : n_vars_(n_vars) {}

std::size_t SlpBuilder::push(SlpNode node) {
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

std::size_t SlpBuilder::input(std::size_t var) {
  if (var >= n_vars_) throw InvalidArgument("input index out of range");
  auto it = inputs_.find(var);
  if (it != inputs_.end()) return it->second;
  std::size_t id = push({SlpOp::Input, var, 0, Rational(0)});
  inputs_.emplace(var, id);
  return id;
}

std::size_t SlpBuilder::constant(const Rational& c) {
  auto it = constants_.find(c);
  if (it != constants_.end()) return it->second;
  std::size_t id = push({SlpOp::Constant, 0, 0, c});
  constants_.emplace(c, id);
  return id;
}

bool SlpBuilder::is_constant(std::size_t node) const {
  return nodes_.at(node).op == SlpOp::Constant;
}

const Rational& SlpBuilder::constant_value(std::size_t node) const {
  if (!is_constant(node)) throw InvalidArgument("node is not a constant");
  return nodes_[node].value;
}

std::size_t SlpBuilder::add(std::size_t a, std::size_t b) {
  bool ca = is_constant(a), cb = is_constant(b);
  if (ca && cb) return constant(nodes_[a].value + nodes_[b].value);
  if (ca && sgn(nodes_[a].value) == 0) return b;
  if (cb && sgn(nodes_[b].value) == 0) return a;
  return push({SlpOp::Add, a, b, Rational(0)});
}

std::size_t SlpBuilder::sub(std::size_t a, std::size_t b) {
  bool ca = is_constant(a), cb = is_constant(b);
  if (ca && cb) return constant(nodes_[a].value - nodes_[b].value);
  if (cb && sgn(nodes_[b].value) == 0) return a;
  if (a == b) return constant(Rational(0));
  return push({SlpOp::Sub, a, b, Rational(0)});
}

std::size_t SlpBuilder::mul(std::size_t a, std::size_t b) {
  bool ca = is_constant(a), cb = is_constant(b);
  if (ca && cb) return constant(nodes_[a].value * nodes_[b].value);
  if ((ca && sgn(nodes_[a].value) == 0) || (cb && sgn(nodes_[b].value) == 0)) {
    return constant(Rational(0));
  }
  if (ca && nodes_[a].value == 1) return b;
  if (cb && nodes_[b].value == 1) return a;
  return push({SlpOp::Mul, a, b, Rational(0)});
}

std::size_t SlpBuilder::neg(std::size_t a) {
  if (is_constant(a)) return constant(-nodes_[a].value);
  return sub(constant(Rational(0)), a);
}

std::size_t SlpBuilder::pow(std::size_t a, unsigned k) {
  std::optional<std::size_t> result;
  std::size_t base = a;
  while (k) {
    if (k & 1) result = result ? mul(*result, base) : base;
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result ? *result : constant(Rational(1));
}

Slp SlpBuilder::finish(std::vector<std::size_t> outputs) && {
  if (nodes_.empty()) constant(Rational(0));
  return Slp(n_vars_, std::move(nodes_), std::move(outputs));
}

Slp gradient_slp(const Slp& s) {
  if (s.outputs().size() != 1) {
    throw InvalidArgument("gradient_slp needs a single-output SLP, got " +
                          std::to_string(s.outputs().size()) + " outputs");
  }
  const auto& nodes = s.nodes();
  SlpBuilder b(s.n_vars());
  std::vector<std::size_t> fwd(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    switch (n.op) {
      case SlpOp::Input: fwd[i] = b.input(n.lhs); break;
      case SlpOp::Constant: fwd[i] = b.constant(n.value); break;
      case SlpOp::Add: fwd[i] = b.add(fwd[n.lhs], fwd[n.rhs]); break;
      case SlpOp::Sub: fwd[i] = b.sub(fwd[n.lhs], fwd[n.rhs]); break;
      case SlpOp::Mul: fwd[i] = b.mul(fwd[n.lhs], fwd[n.rhs]); break;
    }
  }

  // adjoints are only propagated into non-constant nodes
  std::vector<std::optional<std::size_t>> adj(nodes.size());
  auto accumulate = [&](std::size_t target, std::size_t v, bool negate) {
    if (nodes[target].op == SlpOp::Constant) return;
    if (!adj[target]) adj[target] = negate ? b.neg(v) : v;
    else adj[target] = negate ? b.sub(*adj[target], v) : b.add(*adj[target], v);
  };
  std::size_t out = s.outputs().front();
  adj[out] = b.constant(Rational(1));
  for (std::size_t i = out + 1; i-- > 0;) {
    if (!adj[i]) continue;
    const auto& n = nodes[i];
    std::size_t a = *adj[i];
    switch (n.op) {
      case SlpOp::Input:
      case SlpOp::Constant: break;
      case SlpOp::Add:
        accumulate(n.lhs, a, false);
        accumulate(n.rhs, a, false);
        break;
      case SlpOp::Sub:
        accumulate(n.lhs, a, false);
        accumulate(n.rhs, a, true);
        break;
      case SlpOp::Mul:
        if (nodes[n.lhs].op != SlpOp::Constant) accumulate(n.lhs, b.mul(a, fwd[n.rhs]), false);
        if (nodes[n.rhs].op != SlpOp::Constant) accumulate(n.rhs, b.mul(a, fwd[n.lhs]), false);
        break;
    }
  }

  std::vector<std::optional<std::size_t>> partial(s.n_vars());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].op != SlpOp::Input || !adj[i]) continue;
    auto& slot = partial[nodes[i].lhs];
    slot = slot ? b.add(*slot, *adj[i]) : *adj[i];
  }
  std::vector<std::size_t> outputs{fwd[out]};
  for (auto& p : partial) outputs.push_back(p ? *p : b.constant(Rational(0)));
  return std::move(b).finish(std::move(outputs));
}

std::vector<MultiPoly> expand(const Slp& s) {
  std::size_t n = s.n_vars();
  std::vector<MultiPoly> vars;
  vars.reserve(n);
  for (std::size_t k = 0; k < n; ++k) vars.push_back(MultiPoly::variable(n, k));
  return s.evaluate(MultiPolyRing{n}, std::span<const MultiPoly>(vars));
}

Slp slp_from_multipoly(const MultiPoly& p) {
  std::size_t n = p.n_vars();
  SlpBuilder b(n);
  std::size_t acc = b.constant(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    std::size_t term = b.constant(c);
    for (std::size_t v = 0; v < n; ++v) {
      if (e[v]) term = b.mul(term, b.pow(b.input(v), e[v]));
    }
    acc = b.add(acc, term);
  }
  return std::move(b).finish({acc});
}

}  // namespace polar
