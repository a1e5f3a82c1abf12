#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace deltacompat {

/// Variable blocks. T carries derivations, X shifts, Y q-shifts; Q holds the
/// inert parameters q_k of the coefficient field; Aux variables are internal
/// helper symbols (resultant parameters) that never appear in user data.
enum class Block : unsigned char { T, X, Y, Q, Aux };

char block_letter(Block b);

class VarContext;
using ContextPtr = std::shared_ptr<const VarContext>;

/// Declares the variables of the polynomial ring Q[q, t, x, y] and the
/// monomial ordering.
///
/// Variables are laid out by index as t_1..t_l, x_1..x_m, y_1..y_n,
/// q_1..q_n, then auxiliary symbols. y_k is q-shifted by q_k. The ordering
/// is lexicographic along a priority list of variable indices; the default
/// priority is y-block > x-block > t-block > q-block > aux, each block in
/// index order.
class VarContext {
 public:
  VarContext(std::vector<std::string> t_names, std::vector<std::string> x_names,
             std::vector<std::string> y_names, std::vector<std::string> q_names,
             std::vector<std::string> aux_names = {});

  static ContextPtr make(std::vector<std::string> t_names, std::vector<std::string> x_names,
                         std::vector<std::string> y_names, std::vector<std::string> q_names);

  std::size_t arity() const noexcept { return names_.size(); }
  std::size_t l() const noexcept { return l_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t aux_count() const noexcept { return names_.size() - l_ - m_ - 2 * n_; }

  // 0-based positions inside each block.
  std::size_t t_var(std::size_t i) const;
  std::size_t x_var(std::size_t j) const;
  std::size_t y_var(std::size_t k) const;
  std::size_t q_var(std::size_t k) const;
  std::size_t aux_var(std::size_t a) const;

  /// The q-parameter index paired with a y-variable index.
  std::size_t q_of_y(std::size_t y_index) const;

  Block block(std::size_t var) const;
  /// Position of a variable inside its block.
  std::size_t position(std::size_t var) const;
  const std::string& name(std::size_t var) const { return names_.at(var); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  std::vector<std::size_t> block_vars(Block b) const;

  /// Variable indices from highest to lowest priority.
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }

  /// Same variables, different lexicographic priority. `priority` must be a
  /// permutation of all variable indices.
  ContextPtr with_priority(std::vector<std::size_t> priority) const;

  /// Parses "lex:y,x,t,q"-style specs. Tokens are block letters (t, x, y, q)
  /// or variable names; together they must cover every variable exactly once.
  ContextPtr with_ordering(std::string_view spec) const;

  /// The ordering as a spec string naming every variable.
  std::string ordering_spec() const;

  /// A context with one extra auxiliary variable of lowest priority.
  ContextPtr with_aux(std::string name) const;

  /// Structural equality: names, blocks and priority.
  bool operator==(const VarContext& other) const;

 private:
  std::vector<std::string> names_;
  std::size_t l_ = 0;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<std::size_t> priority_;
};

/// Pointer or structural identity.
bool same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace deltacompat
