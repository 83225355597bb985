#include <cstdint>
#include <cstdio>

#include <json.hpp>

#include "polar/slp.hpp"

namespace polar {

using nlohmann::json;

std::string slp_to_json(const Slp& s) {
  json nodes = json::array();
  for (const auto& n : s.nodes()) {
    switch (n.op) {
      case SlpOp::Input: nodes.push_back({"in", n.lhs}); break;
      case SlpOp::Constant: nodes.push_back({"const", to_string(n.value)}); break;
      case SlpOp::Add: nodes.push_back({"add", n.lhs, n.rhs}); break;
      case SlpOp::Sub: nodes.push_back({"sub", n.lhs, n.rhs}); break;
      case SlpOp::Mul: nodes.push_back({"mul", n.lhs, n.rhs}); break;
    }
  }
  json j;
  j["n_vars"] = s.n_vars();
  j["nodes"] = std::move(nodes);
  j["outputs"] = s.outputs();
  return j.dump();
}

namespace {

std::size_t index_field(const json& node, std::size_t k) {
  if (!node.at(k).is_number_unsigned() && !node.at(k).is_number_integer()) {
    throw InvalidArgument("SLP node operand must be an integer");
  }
  long long v = node.at(k).get<long long>();
  if (v < 0) throw InvalidArgument("SLP node operand must be nonnegative");
  return static_cast<std::size_t>(v);
}

}  // namespace

Slp slp_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed SLP JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  try {
    long long n = j.at("n_vars").get<long long>();
    if (n < 0) throw InvalidArgument("n_vars must be nonnegative");
    std::vector<SlpNode> nodes;
    for (const auto& node : j.at("nodes")) {
      if (!node.is_array() || node.empty()) throw InvalidArgument("SLP node must be an array");
      std::string op = node.at(0).get<std::string>();
      auto arity = [&](std::size_t k) {
        if (node.size() != k) throw InvalidArgument("SLP node '" + op + "' has wrong arity");
      };
      if (op == "in") {
        arity(2);
        nodes.push_back({SlpOp::Input, index_field(node, 1), 0, Rational(0)});
      } else if (op == "const") {
        arity(2);
        nodes.push_back({SlpOp::Constant, 0, 0, parse_rational(node.at(1).get<std::string>())});
      } else if (op == "add" || op == "sub" || op == "mul") {
        arity(3);
        SlpOp kind = op == "add" ? SlpOp::Add : op == "sub" ? SlpOp::Sub : SlpOp::Mul;
        nodes.push_back({kind, index_field(node, 1), index_field(node, 2), Rational(0)});
      } else {
        throw InvalidArgument("unknown SLP node kind '" + op + "'");
      }
    }
    std::vector<std::size_t> outputs;
    for (std::size_t k = 0; k < j.at("outputs").size(); ++k) {
      outputs.push_back(index_field(j.at("outputs"), k));
    }
    return Slp(static_cast<std::size_t>(n), std::move(nodes), std::move(outputs));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("invalid SLP JSON: ") + e.what());
  }
}

std::string slp_digest(const Slp& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : slp_to_json(s)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace polar
