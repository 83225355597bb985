#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polar/errors.hpp"
#include "polar/multipoly.hpp"
#include "polar/rational.hpp"
#include "polar/rings.hpp"

namespace polar {

enum class SlpOp : std::uint8_t { Input, Constant, Add, Sub, Mul };

struct SlpNode {
  SlpOp op;
  std::size_t lhs = 0;  // Input: variable index
  std::size_t rhs = 0;
  Rational value;       // Constant only
};

/// Division-free straight-line program. Operands always refer to earlier
/// nodes, so the node list is a topological order of the circuit.
class Slp {
 public:
  /// Validates topological order, operand ranges and a nonempty output list.
  Slp(std::size_t n_vars, std::vector<SlpNode> nodes, std::vector<std::size_t> outputs);

  std::size_t n_vars() const noexcept { return n_vars_; }
  const std::vector<SlpNode>& nodes() const noexcept { return nodes_; }
  const std::vector<std::size_t>& outputs() const noexcept { return outputs_; }

  template <EvaluationRing R>
  std::vector<typename R::value_type> evaluate(
      const R& ring, std::span<const typename R::value_type> point) const;
  std::vector<Rational> evaluate(std::span<const Rational> point) const;

 private:
  std::size_t n_vars_;
  std::vector<SlpNode> nodes_;
  std::vector<std::size_t> outputs_;
};

template <EvaluationRing R>
std::vector<typename R::value_type> Slp::evaluate(
    const R& ring, std::span<const typename R::value_type> point) const {
  using V = typename R::value_type;
  if (point.size() != n_vars_) {
    throw InvalidArgument("SLP expects " + std::to_string(n_vars_) +
                          " inputs, got " + std::to_string(point.size()));
  }
  std::vector<V> tape;
  tape.reserve(nodes_.size());
  for (const auto& node : nodes_) {
    switch (node.op) {
      case SlpOp::Input: tape.push_back(point[node.lhs]); break;
      case SlpOp::Constant: tape.push_back(ring.from_rational(node.value)); break;
      case SlpOp::Add: tape.push_back(ring.add(tape[node.lhs], tape[node.rhs])); break;
      case SlpOp::Sub: tape.push_back(ring.sub(tape[node.lhs], tape[node.rhs])); break;
      case SlpOp::Mul: tape.push_back(ring.mul(tape[node.lhs], tape[node.rhs])); break;
    }
  }
  std::vector<V> out;
  out.reserve(outputs_.size());
  for (std::size_t o : outputs_) out.push_back(tape[o]);
  return out;
}

struct SlpMetrics {
  std::size_t total_size = 0;     // all nodes
  std::size_t nonscalar_size = 0; // products of two non-constant nodes
};

SlpMetrics slp_metrics(const Slp& s);

/// Incremental SLP construction with constant folding: operations on two
/// constants produce a constant, and 0/1 identities are short-circuited.
class SlpBuilder {
 public:
  explicit SlpBuilder(std::size_t n_vars);

  std::size_t input(std::size_t var);
  std::size_t constant(const Rational& c);
  std::size_t add(std::size_t a, std::size_t b);
  std::size_t sub(std::size_t a, std::size_t b);
  std::size_t mul(std::size_t a, std::size_t b);
  std::size_t neg(std::size_t a);
  /// Binary powering; pow(a, 0) is the constant 1.
  std::size_t pow(std::size_t a, unsigned k);

  bool is_constant(std::size_t node) const;
  const Rational& constant_value(std::size_t node) const;
  std::size_t size() const noexcept { return nodes_.size(); }

  Slp finish(std::vector<std::size_t> outputs) &&;

 private:
  std::size_t push(SlpNode node);
  std::size_t n_vars_;
  std::vector<SlpNode> nodes_;
  std::map<Rational, std::size_t> constants_;
  std::map<std::size_t, std::size_t> inputs_;
};

/// Reverse-mode (Baur-Strassen) gradient. Outputs f, df/dX1, ..., df/dXn.
/// Throws InvalidArgument for multi-output input.
Slp gradient_slp(const Slp& s);

/// Expand each output into a sparse polynomial.
std::vector<MultiPoly> expand(const Slp& s);

/// SLP evaluating p term by term (Horner-free, used for generated inputs).
Slp slp_from_multipoly(const MultiPoly& p);

struct MultiPolyRing {
  std::size_t n_vars;
  using value_type = MultiPoly;
  MultiPoly from_rational(const Rational& c) const { return MultiPoly::constant(n_vars, c); }
  MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
  MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const { return a - b; }
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
};

struct ParsedPolynomial {
  std::vector<std::string> variables;
  MultiPoly poly;
  Slp slp;
};

/// Parse an infix expression over the given variable names with integer or
/// rational literals, + - * ^ (nonnegative integer exponent), parentheses, and
/// division by constant subexpressions. Throws ParseError.
ParsedPolynomial parse_poly(std::string_view text, std::span<const std::string> variables);

/// Identifiers occurring in text, in natural order (x2 before x10).
std::vector<std::string> detect_variables(std::string_view text);

/// {"n_vars": n, "nodes": [["in",i] | ["const","p/q"] | ["add",i,j] |
///  ["sub",i,j] | ["mul",i,j]], "outputs": [i, ...]}
std::string slp_to_json(const Slp& s);
Slp slp_from_json(std::string_view text);

/// Canonical JSON text hashed with 64-bit FNV-1a, as 16 hex digits.
std::string slp_digest(const Slp& s);

}  // namespace polar
