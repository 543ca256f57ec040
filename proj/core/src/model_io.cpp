// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include "verimap/model_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "verimap/errors.hpp"
#include "verimap/parser.hpp"

namespace verimap {

namespace {

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

// Single-line scanner with line/column-carrying failures.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw FileSyntaxError("line " + std::to_string(line) + ", col " +
                          std::to_string(pos + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view word() {
    skip_ws();
    std::size_t begin = pos;
    while (pos < text.size() && is_word_char(text[pos])) ++pos;
    return text.substr(begin, pos - begin);
  }

  std::string_view identifier() {
    std::string_view w = word();
    if (w.empty()) fail("expected an identifier");
    return w;
  }

  std::int64_t integer() {
    skip_ws();
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) fail("expected an integer");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }

  double number() {
    skip_ws();
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) fail("expected a probability");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }

  std::string line_prefix() const {
    return "line " + std::to_string(line) + ": ";
  }
};

void append_shortest(std::string& out, double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

}  // namespace

CategoricalDist dist_from_file_probs(std::vector<double> probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0))
      throw DomainError("probability entries must be non-negative and finite");
    sum += p;
  }
  double deviation = std::abs(sum - 1.0);
  if (deviation > kFileSumTol)
    throw DistSumError("probabilities sum to " + std::to_string(sum) +
                       ", beyond the renormalization tolerance");
  if (deviation > kSimplexTol) {
    for (double& p : probs) p /= sum;
  }
  return CategoricalDist{std::move(probs)};
}

Model load_model(std::string_view text) {
  std::vector<VariableDecl> decls;
  std::map<std::string, std::size_t, std::less<>> decl_index;
  std::vector<std::optional<CategoricalDist>> dists;
  FormulaPtr constraint;
  std::size_t constraint_line = 0;
  bool dists_started = false;

  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    Cursor cur{text.substr(begin, end - begin), 0, ++line_no};
    begin = end + 1;

    if (cur.at_end() || cur.text[cur.pos] == '#') continue;
    std::string_view keyword = cur.word();
    if (keyword.empty()) cur.fail("expected a statement keyword");

    if (keyword == "var") {
      if (dists_started || constraint)
        cur.fail("var statements must precede dist and constraint");
      std::string name(cur.identifier());
      if (cur.word() != "in") cur.fail("expected 'in'");
      std::int64_t lo = cur.integer();
      cur.expect('.');
      cur.expect('.');
      std::int64_t hi = cur.integer();
      if (!cur.at_end()) cur.fail("trailing input after var statement");
      if (hi < lo)
        throw DomainError(cur.line_prefix() + "empty range " +
                          std::to_string(lo) + ".." + std::to_string(hi));
      if (!decl_index.emplace(name, decls.size()).second)
        throw DuplicateNameError(cur.line_prefix() + "duplicate variable '" +
                                 name + "'");
      decls.push_back({name, DomainSpec::range(lo, hi), {}});
      dists.emplace_back();
    } else if (keyword == "dist") {
      if (constraint) cur.fail("dist statements must precede the constraint");
      if (decls.empty()) cur.fail("dist before any var statement");
      dists_started = true;
      std::string name(cur.identifier());
      auto it = decl_index.find(name);
      if (it == decl_index.end())
        throw UnknownVariableError(cur.line_prefix() +
                                   "dist for undeclared variable '" + name +
                                   "'");
      cur.expect('=');
      cur.expect('[');
      std::vector<double> probs;
      if (!cur.accept(']')) {
        do {
          probs.push_back(cur.number());
        } while (cur.accept(','));
        cur.expect(']');
      }
      if (!cur.at_end()) cur.fail("trailing input after dist statement");
      if (dists[it->second])
        cur.fail("duplicate dist for '" + name + "'");
      if (probs.size() != decls[it->second].domain.size())
        throw ArityError(cur.line_prefix() + "dist for '" + name + "' has " +
                         std::to_string(probs.size()) +
                         " entries, domain has " +
                         std::to_string(decls[it->second].domain.size()));
      try {
        dists[it->second] = dist_from_file_probs(std::move(probs));
      } catch (const DistSumError& e) {
        throw DistSumError(cur.line_prefix() + e.what());
      } catch (const DomainError& e) {
        throw DomainError(cur.line_prefix() + e.what());
      }
    } else if (keyword == "constraint") {
      if (constraint) cur.fail("duplicate constraint statement");
      if (decls.empty()) cur.fail("constraint before any var statement");
      cur.skip_ws();
      std::string_view body = cur.text.substr(cur.pos);
      try {
        constraint = parse(body);
      } catch (const SyntaxError& e) {
        ParseDiagnostic d = e.diagnostic();
        d.message = cur.line_prefix() + d.message;
        d.offset += cur.pos;
        throw SyntaxError(std::move(d));
      }
      constraint_line = cur.line;
    } else {
      cur.fail("unknown statement '" + std::string(keyword) + "'");
    }
  }

  if (!constraint) throw FileSyntaxError("missing constraint statement");
  std::vector<CategoricalDist> final_dists;
  final_dists.reserve(decls.size());
  for (std::size_t i = 0; i < decls.size(); ++i) {
    if (!dists[i])
      throw FileSyntaxError("missing dist for '" + decls[i].name + "'");
    final_dists.push_back(std::move(*dists[i]));
  }
  try {
    return build_model(std::move(decls), std::move(final_dists),
                       std::move(constraint));
  } catch (const UnknownVariableError& e) {
    throw UnknownVariableError("line " + std::to_string(constraint_line) +
                               ": " + e.what());
  }
}

std::string canonical_serialization(const Model& model) {
  for (const VariableDecl& decl : model.variables()) {
    const auto& values = decl.domain.values;
    std::int64_t span = values.back() - values.front();
    if (span + 1 != static_cast<std::int64_t>(values.size()))
      throw DomainError("domain of '" + decl.name +
                        "' is not contiguous; the file format cannot "
                        "express it");
  }
  std::string out;
  for (const VariableDecl& decl : model.variables()) {
    out += "var " + decl.name + " in ";
    out += std::to_string(decl.domain.values.front());
    out += "..";
    out += std::to_string(decl.domain.values.back());
    out += '\n';
  }
  for (std::size_t i = 0; i < model.size(); ++i) {
    out += "dist " + model.variable(i).name + " = [";
    const auto& probs = model.dist(i).probs;
    for (std::size_t j = 0; j < probs.size(); ++j) {
      if (j) out += ", ";
      append_shortest(out, probs[j]);
    }
    out += "]\n";
  }
  out += "constraint " + to_string(model.constraint()) + "\n";
  return out;
}

std::string model_digest(const Model& model) {
  std::string canon = canonical_serialization(model);
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : canon) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17] = {};
  for (int i = 15; i >= 0; --i) {
    buf[i] = "0123456789abcdef"[hash & 0xf];
    hash >>= 4;
  }
  return std::string("fnv1a64:") + buf;
}

std::vector<double> parse_prob_list(std::string_view text) {
  Cursor cur{text, 0, 1};
  std::vector<double> probs;
  do {
    probs.push_back(cur.number());
  } while (cur.accept(','));
  if (!cur.at_end())
    throw FileSyntaxError("trailing input after probability list");
  return probs;
}

}  // namespace verimap
