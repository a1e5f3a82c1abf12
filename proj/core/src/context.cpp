#include "deltacompat/context.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "deltacompat/error.hpp"

namespace deltacompat {

char block_letter(Block b) {
  switch (b) {
    case Block::T: return 't';
    case Block::X: return 'x';
    case Block::Y: return 'y';
    case Block::Q: return 'q';
    case Block::Aux: return 'a';
  }
  return '?';
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

}  // namespace

VarContext::VarContext(std::vector<std::string> t_names, std::vector<std::string> x_names,
                       std::vector<std::string> y_names, std::vector<std::string> q_names,
                       std::vector<std::string> aux_names)
    : l_(t_names.size()), m_(x_names.size()), n_(y_names.size()) {
  if (q_names.size() != y_names.size())
    throw InvalidVariable("every q-shift variable needs exactly one q parameter");
  if (l_ + m_ + n_ == 0) throw InvalidVariable("context declares no operator variables");

  for (auto* block : {&t_names, &x_names, &y_names, &q_names, &aux_names})
    for (auto& s : *block) names_.push_back(std::move(s));

  std::set<std::string> seen;
  for (const auto& s : names_) {
    if (!valid_identifier(s)) throw InvalidVariable("invalid variable name '" + s + "'");
    if (!seen.insert(s).second) throw InvalidVariable("duplicate variable name '" + s + "'");
  }

  for (std::size_t k = 0; k < n_; ++k) priority_.push_back(l_ + m_ + k);
  for (std::size_t j = 0; j < m_; ++j) priority_.push_back(l_ + j);
  for (std::size_t i = 0; i < l_; ++i) priority_.push_back(i);
  for (std::size_t k = 0; k < n_; ++k) priority_.push_back(l_ + m_ + n_ + k);
  for (std::size_t a = l_ + m_ + 2 * n_; a < names_.size(); ++a) priority_.push_back(a);
}

ContextPtr VarContext::make(std::vector<std::string> t_names, std::vector<std::string> x_names,
                            std::vector<std::string> y_names, std::vector<std::string> q_names) {
  return std::make_shared<const VarContext>(std::move(t_names), std::move(x_names),
                                            std::move(y_names), std::move(q_names));
}

std::size_t VarContext::t_var(std::size_t i) const {
  if (i >= l_) throw InvalidVariable("derivation index out of range");
  return i;
}
std::size_t VarContext::x_var(std::size_t j) const {
  if (j >= m_) throw InvalidVariable("shift index out of range");
  return l_ + j;
}
std::size_t VarContext::y_var(std::size_t k) const {
  if (k >= n_) throw InvalidVariable("q-shift index out of range");
  return l_ + m_ + k;
}
std::size_t VarContext::q_var(std::size_t k) const {
  if (k >= n_) throw InvalidVariable("q parameter index out of range");
  return l_ + m_ + n_ + k;
}
std::size_t VarContext::aux_var(std::size_t a) const {
  if (a >= aux_count()) throw InvalidVariable("auxiliary index out of range");
  return l_ + m_ + 2 * n_ + a;
}

std::size_t VarContext::q_of_y(std::size_t y_index) const {
  if (block(y_index) != Block::Y) throw InvalidVariable("not a q-shift variable: " + name(y_index));
  return y_index + n_;
}

Block VarContext::block(std::size_t var) const {
  if (var < l_) return Block::T;
  if (var < l_ + m_) return Block::X;
  if (var < l_ + m_ + n_) return Block::Y;
  if (var < l_ + m_ + 2 * n_) return Block::Q;
  if (var < names_.size()) return Block::Aux;
  throw InvalidVariable("variable index out of range");
}

std::size_t VarContext::position(std::size_t var) const {
  switch (block(var)) {
    case Block::T: return var;
    case Block::X: return var - l_;
    case Block::Y: return var - l_ - m_;
    case Block::Q: return var - l_ - m_ - n_;
    case Block::Aux: return var - l_ - m_ - 2 * n_;
  }
  return 0;
}

std::optional<std::size_t> VarContext::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> VarContext::block_vars(Block b) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (block(i) == b) out.push_back(i);
  return out;
}

ContextPtr VarContext::with_priority(std::vector<std::size_t> priority) const {
  std::vector<std::size_t> sorted = priority;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i || sorted.size() != names_.size())
      throw InvalidVariable("ordering must list every variable exactly once");
  auto out = std::make_shared<VarContext>(*this);
  out->priority_ = std::move(priority);
  return out;
}

ContextPtr VarContext::with_ordering(std::string_view spec) const {
  std::string_view body = spec;
  if (body.substr(0, 4) == "lex:") body.remove_prefix(4);
  else if (body != "lex")
    throw InvalidVariable("unsupported ordering '" + std::string(spec) + "' (expected lex:...)");
  else body = "y,x,t,q";

  std::vector<std::size_t> priority;
  std::stringstream ss{std::string(body)};
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' '; }), tok.end());
    if (tok.empty()) continue;
    if (tok.size() == 1 && (tok == "t" || tok == "x" || tok == "y" || tok == "q")) {
      Block b = tok == "t" ? Block::T : tok == "x" ? Block::X : tok == "y" ? Block::Y : Block::Q;
      for (auto v : block_vars(b)) priority.push_back(v);
    } else if (auto v = find(tok)) {
      priority.push_back(*v);
    } else {
      throw InvalidVariable("unknown name in ordering: '" + tok + "'");
    }
  }
  for (auto v : block_vars(Block::Aux)) priority.push_back(v);
  return with_priority(std::move(priority));
}

std::string VarContext::ordering_spec() const {
  std::string out = "lex:";
  bool first = true;
  for (auto v : priority_) {
    if (block(v) == Block::Aux) continue;
    if (!first) out += ',';
    out += names_[v];
    first = false;
  }
  return out;
}

ContextPtr VarContext::with_aux(std::string name) const {
  std::vector<std::string> t(names_.begin(), names_.begin() + l_);
  std::vector<std::string> x(names_.begin() + l_, names_.begin() + l_ + m_);
  std::vector<std::string> y(names_.begin() + l_ + m_, names_.begin() + l_ + m_ + n_);
  std::vector<std::string> q(names_.begin() + l_ + m_ + n_, names_.begin() + l_ + m_ + 2 * n_);
  std::vector<std::string> aux(names_.begin() + l_ + m_ + 2 * n_, names_.end());
  aux.push_back(std::move(name));
  auto out = std::make_shared<VarContext>(std::move(t), std::move(x), std::move(y), std::move(q),
                                          std::move(aux));
  // Keep the existing priority and append the new symbol last.
  out->priority_ = priority_;
  out->priority_.push_back(out->names_.size() - 1);
  return out;
}

bool VarContext::operator==(const VarContext& other) const {
  return l_ == other.l_ && m_ == other.m_ && n_ == other.n_ && names_ == other.names_ &&
         priority_ == other.priority_;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace deltacompat
