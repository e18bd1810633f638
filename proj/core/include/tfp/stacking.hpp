#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tfp/extension.hpp"
#include "tfp/pair_store.hpp"
#include "tfp/scaling.hpp"

namespace tfp {

enum class Symbol { O, E, YI, YO, XI, XO };

const char* to_string(Symbol s);
/// Accepts "O", "E", "YI", "YO", "XI", "XO" and the "Y^I" spellings.
Symbol symbol_from_string(std::string_view s);

/// A word over {O, E, YI, YO, XI, XO} whose first symbol is O, E, YO or XO
/// and in which E can only be last.
class StackingWord {
 public:
  StackingWord() = default;
  /// Throws std::invalid_argument for an empty word, a bad first symbol or
  /// an E before the end.
  explicit StackingWord(std::vector<Symbol> symbols);
  /// Space separated symbols, e.g. "YO XO O E".
  static StackingWord parse(std::string_view text);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t length() const { return symbols_.size(); }
  Symbol operator[](std::size_t k) const { return symbols_[k]; }

  /// Occurrences of O or E.
  unsigned w1() const;
  /// Occurrences of XO or YO.
  unsigned w2() const;
  unsigned weight() const { return w1() + w2(); }

  std::string text() const;
  friend bool operator==(const StackingWord&, const StackingWord&) = default;
  friend auto operator<=>(const StackingWord&, const StackingWord&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Some M+1 consecutive symbols lie in {XO,YO} x {XI,YI}^{M-1} x {XI,YI,XO}.
bool has_M_fan(std::span<const Symbol> symbols, unsigned M);

enum class BoundednessViolation {
  e_not_last,       // (i)
  inner_after_o,    // (ii) O XI or O YI before the last two positions
  weight_too_large, // (iii) w > 2M
  bad_last_symbol,  // (iv) w = 2M and the last symbol is XI or YI
  contains_fan,     // (v)
};

const char* to_string(BoundednessViolation v);

/// Every failed condition, in order (i)..(v). Works on raw symbol sequences
/// so that condition (i) can be exercised.
std::vector<BoundednessViolation> check_M_bounded(std::span<const Symbol> symbols, unsigned M);
bool is_M_bounded(const StackingWord& word, unsigned M);

/// Pattern of S^π_{uv}: α_u = 0, α_v = 1, α_i = i + 1 for the i-th symbol.
/// The base rung uv is listed as an open pair inside the base.
struct Realization {
  ExtensionPattern pattern;
  std::vector<PatternPair> rungs;           // in creation order, starting with uv
  std::vector<PatternPair> stringer_opens;  // open pairs that are not rungs
  std::vector<PatternPair> stringer_edges;
  std::optional<PatternPair> active_rung;   // empty after a final E
  /// Set when π ends with O followed by a symbol other than O or E.
  std::optional<std::pair<PatternPair, PatternPair>> partner_pairs;
};

Realization realize(const StackingWord& word);

/// S^π_{uv}: embeddings of the realization with α_u -> u and α_v -> v.
std::uint64_t count(const PairStore& store, Vertex u, Vertex v, const StackingWord& word);

/// Tracking value of S^π_{uv} from the current graph. Length one uses the
/// one-vertex formula; otherwise either S^{π⁻}·T U or the partner sum over
/// embeddings of π⁻ of X_β², X_β² or X_β Y_β times Q/n², 2t n^{-1/2}, Q/n².
double tracking_value(const PairStore& store, Vertex u, Vertex v, const StackingWord& word,
                      const ScalingContext& ctx);

/// Edge and open counts outside the base, plus the weights the error band uses.
StackingKind stacking_kind(const StackingWord& word);

/// Backward extension of a word that ends on a rung α_x α_y: base
/// {α_u, α_v, α_x, α_y}, same J, and α_x α_y dropped from Γ.
ExtensionPattern backward_extension(const StackingWord& word);

/// Every M-bounded word of length at most max_len, depth first in symbol
/// order. Requires max_len <= 2M².
void for_each_M_bounded(unsigned M, unsigned max_len, const std::function<void(const StackingWord&)>& visit);
std::vector<StackingWord> enumerate_M_bounded(unsigned M, unsigned max_len);

}  // namespace tfp
