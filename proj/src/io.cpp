#include "coquasi/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace coquasi {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

// Splits one line on whitespace, dropping `#` comments.
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

class InstanceParser {
 public:
  explicit InstanceParser(std::string_view text) : text_(text) {}

  AlgebraInstance parse() {
    std::istringstream in{std::string(text_)};
    std::string line;
    while (std::getline(in, line)) {
      ++lineno_;
      auto tokens = tokenize(line);
      if (!tokens.empty()) handle(tokens);
    }
    return finish();
  }

 private:
  std::string_view text_;
  int lineno_ = 0;

  std::optional<FieldSpec> field_;
  std::optional<Index> dim_;
  std::vector<std::string> basis_;
  int unit_line_ = 0;

  std::optional<std::vector<std::pair<Index, Scalar>>> unit_, counit_, alpha_, beta_;
  std::map<std::pair<Index, Index>, std::vector<std::pair<Index, Scalar>>> mult_;
  std::map<Index, std::vector<std::pair<std::pair<Index, Index>, Scalar>>> comult_;
  std::map<std::tuple<Index, Index, Index>, Scalar> phi_;
  std::map<Index, std::vector<std::pair<Index, Scalar>>> antipode_;
  bool has_antipode_ = false;
  std::vector<std::vector<std::pair<Index, Scalar>>> grouplikes_;

  [[noreturn]] void err(int column, const std::string& msg) {
    throw SyntaxError(lineno_, column, msg);
  }

  Index label(const Token& t) {
    for (Index i = 0; i < basis_.size(); ++i)
      if (basis_[i] == t.text) return i;
    throw UnknownBasisLabel(t.text);
  }

  Scalar scalar(const Token& t) {
    try {
      return Scalar::parse(*field_, t.text);
    } catch (const Error& e) {
      err(t.column, e.what());
    }
  }

  // "label:scalar"
  std::pair<Index, Scalar> term(const Token& t) {
    auto colon = t.text.find(':');
    if (colon == std::string::npos) err(t.column, "expected label:scalar, got '" + t.text + "'");
    Index i = label({t.text.substr(0, colon), t.column});
    Scalar c = scalar({t.text.substr(colon + 1), t.column + static_cast<int>(colon) + 1});
    return {i, c};
  }

  // "label,label:scalar"
  std::pair<std::pair<Index, Index>, Scalar> pair_term(const Token& t) {
    auto colon = t.text.find(':');
    auto comma = t.text.find(',');
    if (colon == std::string::npos || comma == std::string::npos || comma > colon)
      err(t.column, "expected label,label:scalar, got '" + t.text + "'");
    Index a = label({t.text.substr(0, comma), t.column});
    Index b = label({t.text.substr(comma + 1, colon - comma - 1), t.column});
    Scalar c = scalar({t.text.substr(colon + 1), t.column + static_cast<int>(colon) + 1});
    return {{a, b}, c};
  }

  void require_header(const Token& where) {
    if (!field_) err(where.column, "'field' must be declared first");
    if (!dim_) err(where.column, "'dim' must be declared before structure lines");
    if (basis_.empty()) err(where.column, "'basis' must be declared before structure lines");
  }

  std::vector<std::pair<Index, Scalar>> term_list(const std::vector<Token>& tokens,
                                                  std::size_t from) {
    if (tokens.size() <= from) err(tokens[0].column, "expected at least one label:scalar term");
    std::vector<std::pair<Index, Scalar>> out;
    for (std::size_t i = from; i < tokens.size(); ++i) out.push_back(term(tokens[i]));
    return out;
  }

  void expect_arrow(const std::vector<Token>& tokens, std::size_t at) {
    if (tokens.size() <= at || tokens[at].text != "->")
      err(tokens.back().column, "expected '->'");
  }

  void handle(const std::vector<Token>& tokens) {
    const std::string& kw = tokens[0].text;
    if (kw == "field") {
      if (field_) err(tokens[0].column, "duplicate 'field' line");
      if (tokens.size() == 2 && tokens[1].text == "Q") {
        field_ = FieldSpec::rationals();
      } else if (tokens.size() == 3 && tokens[1].text == "Fp") {
        try {
          field_ = FieldSpec::prime_field(std::stoull(tokens[2].text));
        } catch (const Error& e) {
          err(tokens[2].column, e.what());
        } catch (const std::exception&) {
          err(tokens[2].column, "bad modulus '" + tokens[2].text + "'");
        }
      } else {
        err(tokens[0].column, "expected 'field Q' or 'field Fp <p>'");
      }
    } else if (kw == "dim") {
      if (dim_) err(tokens[0].column, "duplicate 'dim' line");
      if (tokens.size() != 2) err(tokens[0].column, "expected 'dim <n>'");
      try {
        unsigned long n = std::stoul(tokens[1].text);
        if (n == 0) err(tokens[1].column, "dimension must be positive");
        dim_ = static_cast<Index>(n);
      } catch (const SyntaxError&) {
        throw;
      } catch (const std::exception&) {
        err(tokens[1].column, "bad dimension '" + tokens[1].text + "'");
      }
    } else if (kw == "basis") {
      if (!basis_.empty()) err(tokens[0].column, "duplicate 'basis' line");
      if (!dim_) err(tokens[0].column, "'dim' must precede 'basis'");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& l = tokens[i].text;
        if (l.find_first_of(":,#") != std::string::npos || l == "->")
          err(tokens[i].column, "basis label '" + l + "' contains a reserved character");
        for (const auto& seen : basis_)
          if (seen == l) err(tokens[i].column, "duplicate basis label '" + l + "'");
        basis_.push_back(l);
      }
      if (basis_.size() != *dim_)
        throw DimensionMismatch("basis lists " + std::to_string(basis_.size()) +
                                " labels but dim is " + std::to_string(*dim_));
    } else if (kw == "unit") {
      require_header(tokens[0]);
      if (unit_) err(tokens[0].column, "duplicate 'unit' line");
      unit_ = term_list(tokens, 1);
      unit_line_ = lineno_;
    } else if (kw == "counit") {
      require_header(tokens[0]);
      if (counit_) err(tokens[0].column, "duplicate 'counit' line");
      counit_ = term_list(tokens, 1);
    } else if (kw == "alpha" || kw == "beta") {
      require_header(tokens[0]);
      auto& slot = kw == "alpha" ? alpha_ : beta_;
      if (slot) err(tokens[0].column, "duplicate '" + kw + "' line");
      slot = term_list(tokens, 1);
    } else if (kw == "mult") {
      require_header(tokens[0]);
      if (tokens.size() < 5) err(tokens[0].column, "expected 'mult <a> <b> -> terms'");
      Index a = label(tokens[1]), b = label(tokens[2]);
      expect_arrow(tokens, 3);
      auto key = std::make_pair(a, b);
      if (mult_.count(key)) err(tokens[1].column, "duplicate 'mult' entry");
      mult_[key] = term_list(tokens, 4);
    } else if (kw == "comult") {
      require_header(tokens[0]);
      if (tokens.size() < 4) err(tokens[0].column, "expected 'comult <a> -> pairs'");
      Index a = label(tokens[1]);
      expect_arrow(tokens, 2);
      if (comult_.count(a)) err(tokens[1].column, "duplicate 'comult' entry");
      std::vector<std::pair<std::pair<Index, Index>, Scalar>> terms;
      for (std::size_t i = 3; i < tokens.size(); ++i) terms.push_back(pair_term(tokens[i]));
      comult_[a] = std::move(terms);
    } else if (kw == "phi") {
      require_header(tokens[0]);
      if (tokens.size() != 6) err(tokens[0].column, "expected 'phi <a> <b> <c> -> <scalar>'");
      Index a = label(tokens[1]), b = label(tokens[2]), c = label(tokens[3]);
      expect_arrow(tokens, 4);
      auto key = std::make_tuple(a, b, c);
      if (phi_.count(key)) err(tokens[1].column, "duplicate 'phi' entry");
      phi_[key] = scalar(tokens[5]);
    } else if (kw == "antipode") {
      require_header(tokens[0]);
      if (tokens.size() < 4) err(tokens[0].column, "expected 'antipode <a> -> terms'");
      Index a = label(tokens[1]);
      expect_arrow(tokens, 2);
      if (antipode_.count(a)) err(tokens[1].column, "duplicate 'antipode' entry");
      antipode_[a] = term_list(tokens, 3);
      has_antipode_ = true;
    } else if (kw == "grouplike") {
      require_header(tokens[0]);
      if (tokens.size() < 2) err(tokens[0].column, "expected 'grouplike <label>' or terms");
      std::vector<std::pair<Index, Scalar>> terms;
      if (tokens.size() == 2 && tokens[1].text.find(':') == std::string::npos) {
        terms.emplace_back(label(tokens[1]), Scalar::one(*field_));
      } else {
        terms = term_list(tokens, 1);
      }
      grouplikes_.push_back(std::move(terms));
    } else {
      err(tokens[0].column, "unknown keyword '" + kw + "'");
    }
  }

  AlgebraInstance finish() {
    lineno_ = lineno_ ? lineno_ : 1;
    if (!field_) throw SyntaxError(lineno_, 1, "missing 'field' line");
    if (!dim_) throw SyntaxError(lineno_, 1, "missing 'dim' line");
    if (basis_.empty()) throw SyntaxError(lineno_, 1, "missing 'basis' line");
    if (!unit_) throw SyntaxError(lineno_, 1, "missing 'unit' line");
    if (!counit_) throw SyntaxError(lineno_, 1, "missing 'counit' line");

    bool any_hopf = has_antipode_ || alpha_ || beta_;
    bool all_hopf = has_antipode_ && alpha_ && beta_;
    if (any_hopf && !all_hopf)
      throw SyntaxError(lineno_, 1,
                        "antipode, alpha and beta must be given together (all three or none)");

    AlgebraInstance H;
    H.field = *field_;
    H.dim = *dim_;
    H.basis = basis_;
    Index n = H.dim;

    H.unit = SparseTensor(Variance::Element, H.field, {n});
    for (const auto& [i, c] : *unit_) H.unit.add({i}, c);
    H.counit = SparseTensor(Variance::Functional, H.field, {n});
    for (const auto& [i, c] : *counit_) H.counit.add({i}, c);

    H.mult = LinMap(H.field, {n, n}, {n});
    for (const auto& [ab, terms] : mult_)
      for (const auto& [t, c] : terms) H.mult.add({ab.first, ab.second}, {t}, c);

    H.comult = LinMap(H.field, {n}, {n, n});
    for (const auto& [a, terms] : comult_)
      for (const auto& [uv, c] : terms) H.comult.add({a}, {uv.first, uv.second}, c);

    H.phi = SparseTensor(Variance::Functional, H.field, {n, n, n});
    for (const auto& [abc, c] : phi_)
      H.phi.add({std::get<0>(abc), std::get<1>(abc), std::get<2>(abc)}, c);

    if (all_hopf) {
      LinMap S(H.field, {n}, {n});
      for (const auto& [a, terms] : antipode_)
        for (const auto& [t, c] : terms) S.add({a}, {t}, c);
      H.antipode = std::move(S);
      SparseTensor al(Variance::Functional, H.field, {n});
      for (const auto& [i, c] : *alpha_) al.add({i}, c);
      H.alpha = std::move(al);
      SparseTensor be(Variance::Functional, H.field, {n});
      for (const auto& [i, c] : *beta_) be.add({i}, c);
      H.beta = std::move(be);
    }

    for (const auto& terms : grouplikes_) {
      SparseTensor g(Variance::Element, H.field, {n});
      for (const auto& [i, c] : terms) g.add({i}, c);
      H.grouplikes.push_back(std::move(g));
    }

    if (!(contract(H.counit, H.unit) == Scalar::one(H.field)))
      throw SyntaxError(unit_line_, 1, "counit(unit) must equal 1");
    return H;
  }
};

std::string format_terms(const AlgebraInstance& H, const SparseTensor& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : t.entries()) {
    if (!first) os << ' ';
    first = false;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) os << ',';
      os << H.basis[k[i]];
    }
    os << ':' << v.to_string();
  }
  return os.str();
}

}  // namespace

AlgebraInstance parse_instance(std::string_view text) { return InstanceParser(text).parse(); }

AlgebraInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const AlgebraInstance& H) {
  std::ostringstream os;
  os << "field " << H.field.to_string() << '\n';
  os << "dim " << H.dim << '\n';
  os << "basis";
  for (const auto& l : H.basis) os << ' ' << l;
  os << '\n';
  os << "unit " << format_terms(H, H.unit) << '\n';
  os << "counit " << format_terms(H, H.counit) << '\n';

  for (Index a = 0; a < H.dim; ++a)
    for (Index b = 0; b < H.dim; ++b) {
      SparseTensor prod = H.product(H.basis_elem(a), H.basis_elem(b));
      if (prod.is_zero()) continue;
      os << "mult " << H.basis[a] << ' ' << H.basis[b] << " -> " << format_terms(H, prod) << '\n';
    }

  for (Index a = 0; a < H.dim; ++a) {
    SparseTensor cp = H.comult.apply(H.basis_elem(a));
    if (cp.is_zero()) continue;
    os << "comult " << H.basis[a] << " -> " << format_terms(H, cp) << '\n';
  }

  for (const auto& [k, v] : H.phi.entries())
    os << "phi " << H.basis[k[0]] << ' ' << H.basis[k[1]] << ' ' << H.basis[k[2]] << " -> "
       << v.to_string() << '\n';

  if (H.has_hopf_data()) {
    for (Index a = 0; a < H.dim; ++a) {
      SparseTensor img = H.antipode->apply(H.basis_elem(a));
      if (img.is_zero()) continue;
      os << "antipode " << H.basis[a] << " -> " << format_terms(H, img) << '\n';
    }
    os << "alpha " << format_terms(H, *H.alpha) << '\n';
    os << "beta " << format_terms(H, *H.beta) << '\n';
  }

  for (const auto& g : H.grouplikes) {
    os << "grouplike ";
    if (g.term_count() == 1 && g.entries().begin()->second.is_one())
      os << H.basis[g.entries().begin()->first[0]];
    else
      os << format_terms(H, g);
    os << '\n';
  }
  return os.str();
}

void write_instance(const AlgebraInstance& H, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_instance(H);
}

}  // namespace coquasi
