#pragma once

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abtor/chain_complex.hpp"
#include "abtor/cyclotomic.hpp"
#include "abtor/free_group.hpp"
#include "abtor/laurent.hpp"
#include "abtor/mapping_torus.hpp"
#include "abtor/presentation.hpp"
#include "abtor/ratfunc.hpp"

namespace abtor {

/// Whitespace-separated tokens `name` or `name^k`; `1` is the empty word.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

/// Integer combination of words, e.g. `1 - 2*x y^-1 + y`.
GroupRingElem parse_group_ring(const std::string& text, const std::vector<std::string>& names);

/// Variable naming understood by the Laurent parser in a ring with n
/// variables: `t1..tn`, or `s1..s{n-1}` followed by `t` as the last
/// variable. With n = 1 the variable is `t`.
std::vector<std::string> laurent_names(std::size_t vars, bool fibered = false);

/// Arithmetic over integers and the variables above: + - * ^ / ( ).
/// Division must be exact in Z[Z^n]. With n = 0 only integers are allowed.
MultiLaurent parse_laurent(const std::string& text, std::size_t vars);
/// Same, with n read off the largest variable index that occurs.
MultiLaurent parse_laurent(const std::string& text);

Rational parse_rational_expr(const std::string& text);
RationalFunction parse_rational_function(const std::string& text);
/// Symbol `z` is zeta_n.
CyclotomicElem parse_cyclotomic(const std::string& text, const CyclotomicField& field);

/// `gens:` and `rel:` lines; `#` starts a comment.
Presentation parse_presentation(std::istream& in);

enum class FieldKind { Rational, RationalFunction, Cyclotomic };

/// Field of a chain complex file; `conductor` is used for Q(zeta n).
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  int conductor = 0;
  std::string str() const;
};
FieldSpec parse_field_spec(const std::string& text);

/// Unevaluated chain complex file: entries are kept as expression text so
/// they can be read over the declared field.
struct ChainComplexText {
  FieldSpec field;
  std::vector<std::size_t> dims;  // dims[i] = dim C_i
  std::map<std::size_t, std::vector<std::vector<std::string>>> boundaries;
  std::map<std::size_t, std::vector<std::vector<std::string>>> homology;
};
ChainComplexText parse_chain_complex_text(std::istream& in);

template <class Field>
BasedChainComplex<Field> build_complex(const ChainComplexText& text, const Field& f,
                                       const std::function<typename Field::value_type(const std::string&)>& entry) {
  const std::size_t m = text.dims.size() - 1;
  std::vector<Matrix<typename Field::value_type>> d;
  for (std::size_t i = 1; i <= m; ++i) {
    Matrix<typename Field::value_type> b(text.dims[i - 1], text.dims[i], f.zero());
    auto it = text.boundaries.find(i);
    if (it != text.boundaries.end()) {
      const auto& rows = it->second;
      if (rows.size() != b.rows())
        fail(Errc::Parse, "boundary " + std::to_string(i) + " needs " + std::to_string(b.rows()) + " rows");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != b.cols())
          fail(Errc::Parse, "boundary " + std::to_string(i) + " row " + std::to_string(r + 1) + " needs " +
                                std::to_string(b.cols()) + " entries");
        for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = entry(rows[r][c]);
      }
    } else if (b.rows() != 0 && b.cols() != 0) {
      fail(Errc::Parse, "boundary " + std::to_string(i) + " is missing");
    }
    d.push_back(std::move(b));
  }
  return BasedChainComplex<Field>(f, text.dims, std::move(d));
}

template <class Field>
std::optional<HomologyData<Field>> build_homology(const ChainComplexText& text,
                                                  const std::function<typename Field::value_type(const std::string&)>& entry) {
  if (text.homology.empty()) return std::nullopt;
  HomologyData<Field> h;
  h.bases.resize(text.dims.size());
  for (const auto& [i, rows] : text.homology)
    for (const auto& row : rows) {
      std::vector<typename Field::value_type> v;
      for (const auto& e : row) v.push_back(entry(e));
      h.bases[i].push_back(std::move(v));
    }
  return h;
}

/// `genus:` then `image <gen>: <word>` lines; unlisted generators are fixed.
SurfaceAutomorphism parse_automorphism(std::istream& in);

}  // namespace abtor
