#include "qhmt/qhspec/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "qhmt/errors.hpp"

namespace qhmt::qhspec {

const Element* SpecDocument::element(std::string_view name) const {
  for (const auto& [n, x] : elements)
    if (n == name) return &x;
  return nullptr;
}

const LinearForm* SpecDocument::form(std::string_view name) const {
  for (const auto& [n, f] : forms)
    if (n == name) return &f;
  return nullptr;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::string raw;  // comment stripped
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++number;
    std::string raw(text.substr(pos, nl - pos));
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, raw, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  return out;
}

[[noreturn]] void syntax(const Line& l, std::size_t column, const std::string& msg) {
  throw SyntaxError(l.number, column, msg);
}

[[noreturn]] void semantic(std::size_t line, const std::string& msg) {
  if (line == 0) throw SemanticError(msg);
  throw SemanticError("line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_count(const Line& l, const Token& t) {
  if (t.text.empty() || t.text.size() > 9 ||
      !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    syntax(l, t.column, "expected a non-negative integer, got '" + t.text + "'");
  return std::stoul(t.text);
}

enum class BlockKind { Labels, Indices, Entries };

struct BlockShape {
  BlockKind kind;
  std::size_t indices;  // per entry line, for Entries
};

const std::map<std::string, BlockShape>& block_shapes() {
  static const std::map<std::string, BlockShape> shapes = {
      {"basis", {BlockKind::Labels, 0}},        {"generators", {BlockKind::Indices, 1}},
      {"unit", {BlockKind::Entries, 1}},        {"mul", {BlockKind::Entries, 3}},
      {"coproduct", {BlockKind::Entries, 3}},   {"counit", {BlockKind::Entries, 1}},
      {"antipode", {BlockKind::Entries, 2}},    {"antipode_inverse", {BlockKind::Entries, 2}},
      {"phi", {BlockKind::Entries, 3}},         {"psi", {BlockKind::Entries, 3}},
      {"alpha", {BlockKind::Entries, 1}},       {"beta", {BlockKind::Entries, 1}},
      {"pivot", {BlockKind::Entries, 1}},       {"twist", {BlockKind::Entries, 2}},
      {"twist_inverse", {BlockKind::Entries, 2}}, {"element", {BlockKind::Entries, 1}},
      {"form", {BlockKind::Entries, 1}},
  };
  return shapes;
}

// One block's worth of entries, flattened with the first index most significant.
struct Block {
  std::size_t line = 0;
  std::vector<SparseVector::Entry> entries;
  std::vector<std::string> labels;
  std::vector<std::size_t> indices;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(split_lines(text)) {}

  SpecDocument run() {
    header();
    while (pos_ < lines_.size()) block();
    return assemble();
  }

 private:
  const Line& next(const char* expecting) {
    if (pos_ >= lines_.size()) {
      std::size_t last = lines_.empty() ? 1 : lines_.back().number;
      throw SyntaxError(last, 1, std::string("unexpected end of input, expected ") + expecting);
    }
    return lines_[pos_++];
  }

  void header() {
    const Line& magic = next("'qhspec 1'");
    if (magic.tokens.size() != 2 || magic.tokens[0].text != "qhspec")
      syntax(magic, magic.tokens[0].column, "expected 'qhspec 1'");
    if (magic.tokens[1].text != "1") syntax(magic, magic.tokens[1].column, "unsupported version " + magic.tokens[1].text);
    for (const char* key : {"field", "dim"}) {
      const Line& l = next(key);
      if (l.tokens[0].text != key) syntax(l, l.tokens[0].column, std::string("expected '") + key + "'");
      if (l.tokens.size() != 2) syntax(l, l.tokens[0].column, std::string("'") + key + "' takes one integer");
      std::size_t v = parse_count(l, l.tokens[1]);
      if (std::string(key) == "field") {
        if (v < 1 || v > static_cast<std::size_t>(kMaxConductor))
          syntax(l, l.tokens[1].column, "conductor outside [1, " + std::to_string(kMaxConductor) + "]");
        conductor_ = static_cast<int>(v);
      } else {
        if (v == 0) syntax(l, l.tokens[1].column, "dimension must be positive");
        dim_ = v;
        try {
          tensor_extent(dim_, 3);
        } catch (const ShapeMismatch&) {
          syntax(l, l.tokens[1].column, "dimension too large");
        }
      }
    }
  }

  void block() {
    const Line& head = next("a block");
    const std::string& kw = head.tokens[0].text;
    auto it = block_shapes().find(kw);
    if (it == block_shapes().end()) syntax(head, head.tokens[0].column, "unknown block '" + kw + "'");
    const bool named = kw == "element" || kw == "form";
    if (named != (head.tokens.size() == 2) || head.tokens.size() > 2)
      syntax(head, head.tokens[0].column, named ? "'" + kw + "' needs exactly one name" : "unexpected text after '" + kw + "'");
    std::string key = named ? kw + " " + head.tokens[1].text : kw;
    if (blocks_.count(key)) semantic(head.number, "duplicate block '" + key + "'");

    Block b;
    b.line = head.number;
    const BlockShape shape = it->second;
    std::set<Index> seen;
    for (;;) {
      const Line& l = next("'end'");
      if (l.tokens[0].text == "end") {
        if (l.tokens.size() != 1) syntax(l, l.tokens[1].column, "unexpected text after 'end'");
        break;
      }
      switch (shape.kind) {
        case BlockKind::Labels:
          if (l.tokens.size() != 1) syntax(l, l.tokens[1].column, "basis labels cannot contain spaces");
          b.labels.push_back(l.tokens[0].text);
          break;
        case BlockKind::Indices:
          if (l.tokens.size() != 1) syntax(l, l.tokens[1].column, "expected one index per line");
          b.indices.push_back(index(l, l.tokens[0]));
          break;
        case BlockKind::Entries: {
          if (l.tokens.size() <= shape.indices)
            syntax(l, l.raw.size() + 1, "expected " + std::to_string(shape.indices) + " indices and a coefficient");
          Index flat = 0;
          for (std::size_t k = 0; k < shape.indices; ++k) flat = flat * dim_ + index(l, l.tokens[k]);
          if (!seen.insert(flat).second) semantic(l.number, "duplicate entry in block '" + key + "'");
          b.entries.emplace_back(flat, scalar(l, l.tokens[shape.indices].column));
          break;
        }
      }
    }
    order_.push_back(key);
    blocks_.emplace(std::move(key), std::move(b));
  }

  std::size_t index(const Line& l, const Token& t) {
    std::size_t v = parse_count(l, t);
    if (v >= dim_) semantic(l.number, "index " + t.text + " out of range for dimension " + std::to_string(dim_));
    return v;
  }

  // The coefficient runs from `column` to the end of the line.
  Scalar scalar(const Line& l, std::size_t column) {
    std::string_view text(l.raw);
    text.remove_prefix(column - 1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    try {
      return Scalar::parse(text, conductor_);
    } catch (const ParseError& e) {
      syntax(l, column + (e.column() > 0 ? e.column() - 1 : 0), e.message());
    } catch (const DivisionByZero&) {
      syntax(l, column, "zero denominator in '" + std::string(text) + "'");
    } catch (const FieldMismatch& e) {
      syntax(l, column, e.what());
    }
  }

  const Block* find(const std::string& key) const {
    auto it = blocks_.find(key);
    return it == blocks_.end() ? nullptr : &it->second;
  }

  const Block& require(const std::string& key, const std::string& what = {}) const {
    const Block* b = find(key);
    if (!b) semantic(0, what.empty() ? "missing block '" + key + "'" : what);
    return *b;
  }

  SparseVector vec(const Block& b) const { return SparseVector::from_entries(b.entries); }

  // Images of basis elements under a map given by (i, rest...) entries.
  std::vector<SparseVector> images(const Block& b, std::size_t codomain_order) const {
    const Index stride = tensor_extent(dim_, codomain_order);
    std::vector<std::vector<SparseVector::Entry>> rows(dim_);
    for (const auto& [flat, c] : b.entries) rows[flat / stride].emplace_back(flat % stride, c);
    std::vector<SparseVector> out;
    out.reserve(dim_);
    for (auto& r : rows) out.push_back(SparseVector::from_entries(std::move(r)));
    return out;
  }

  SpecDocument assemble() {
    SpecDocument doc;
    doc.conductor = conductor_;
    const Block& basis = require("basis");
    if (basis.labels.size() != dim_)
      semantic(basis.line, "basis has " + std::to_string(basis.labels.size()) + " labels, dim is " + std::to_string(dim_));
    {
      std::set<std::string> distinct(basis.labels.begin(), basis.labels.end());
      if (distinct.size() != basis.labels.size()) semantic(basis.line, "basis labels are not distinct");
    }
    std::vector<Element> hint;
    if (const Block* g = find("generators")) {
      doc.generators = g->indices;
      for (std::size_t i : g->indices) hint.push_back(Element::unit(i));
    }
    std::vector<Element> table(dim_ * dim_);
    {
      std::vector<std::vector<SparseVector::Entry>> cells(dim_ * dim_);
      for (const auto& [flat, c] : require("mul").entries) cells[flat / dim_].emplace_back(flat % dim_, c);
      for (std::size_t k = 0; k < cells.size(); ++k) table[k] = SparseVector::from_entries(std::move(cells[k]));
    }
    auto alg = std::make_shared<AlgebraData>(basis.labels, std::move(table), vec(require("unit")), std::move(hint));

    QuasiHopfData& d = doc.data;
    d.algebra = alg;
    d.coproduct = LinearOperator(dim_, 1, 2, images(require("coproduct"), 2));
    d.counit = LinearForm(1, dim_, vec(require("counit")));
    d.antipode = LinearOperator(dim_, 1, 1, images(require("antipode"), 1));
    d.antipode_inverse =
        LinearOperator(dim_, 1, 1, images(require("antipode_inverse", "missing inverse antipode"), 1));
    if (!(d.antipode.compose(d.antipode_inverse) == LinearOperator::identity(dim_)) ||
        !(d.antipode_inverse.compose(d.antipode) == LinearOperator::identity(dim_)))
      semantic(find("antipode_inverse")->line, "antipode_inverse is not inverse to antipode");
    d.phi = TensorElement(3, dim_, vec(require("phi")));
    const TensorElement one3 = TensorElement::unit(*alg, 3);
    if (const Block* psi = find("psi")) {
      d.psi = TensorElement(3, dim_, vec(*psi));
      if (!(mul_tensor(*alg, d.phi, d.psi) == one3) || !(mul_tensor(*alg, d.psi, d.phi) == one3))
        semantic(psi->line, "psi is not inverse to phi");
    } else {
      auto inv = invert_tensor(*alg, d.phi);
      if (!inv) semantic(find("phi")->line, "phi is not invertible");
      d.psi = *inv;
    }
    d.alpha = vec(require("alpha"));
    d.beta = vec(require("beta"));

    const Block* pivot = find("pivot");
    const Block* twist = find("twist");
    const Block* twist_inv = find("twist_inverse");
    if (pivot || twist || twist_inv) {
      if (!pivot || !twist) semantic((pivot ? pivot : twist ? twist : twist_inv)->line, "pivot and twist come together");
      PivotalData p;
      p.pivot = vec(*pivot);
      if (!invert_element(*alg, p.pivot)) semantic(pivot->line, "pivot is not invertible");
      p.twist = TensorElement(2, dim_, vec(*twist));
      const TensorElement one2 = TensorElement::unit(*alg, 2);
      if (twist_inv) {
        p.twist_inverse = TensorElement(2, dim_, vec(*twist_inv));
        if (!(mul_tensor(*alg, p.twist, p.twist_inverse) == one2) || !(mul_tensor(*alg, p.twist_inverse, p.twist) == one2))
          semantic(twist_inv->line, "twist_inverse is not inverse to twist");
      } else {
        auto inv = invert_tensor(*alg, p.twist);
        if (!inv) semantic(twist->line, "twist is not invertible");
        p.twist_inverse = *inv;
      }
      d.pivotal = std::move(p);
    }

    for (const std::string& key : order_) {
      if (key.rfind("element ", 0) == 0) doc.elements.emplace_back(key.substr(8), vec(blocks_.at(key)));
      if (key.rfind("form ", 0) == 0) doc.forms.emplace_back(key.substr(5), LinearForm(1, dim_, vec(blocks_.at(key))));
    }
    return doc;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  int conductor_ = 1;
  std::size_t dim_ = 0;
  std::map<std::string, Block> blocks_;
  std::vector<std::string> order_;
};

void conductor_of(const SparseVector& v, int& acc) {
  for (const auto& [i, c] : v)
    if (!c.is_rational()) acc = std::lcm(acc, c.conductor());
}

class Writer {
 public:
  Writer(std::size_t dim, int conductor) : dim_(dim), conductor_(conductor) {}

  void line(const std::string& s) {
    out_ += s;
    out_ += '\n';
  }

  // Entries with `order` indices each.
  void entries(const std::string& head, const SparseVector& v, std::size_t order) {
    line(head);
    for (const auto& [flat, c] : v) {
      std::vector<std::size_t> idx(order);
      Index rest = flat;
      for (std::size_t k = order; k-- > 0;) {
        idx[k] = rest % dim_;
        rest /= dim_;
      }
      std::string s;
      for (std::size_t i : idx) s += std::to_string(i) + " ";
      line(s + c.str_in(conductor_));
    }
    line("end");
  }

  void map(const std::string& head, const std::vector<SparseVector>& images, std::size_t domain_order,
           std::size_t codomain_order) {
    const Index stride = tensor_extent(dim_, codomain_order);
    SparseAccumulator acc;
    for (std::size_t i = 0; i < images.size(); ++i) acc.add_shifted(images[i], Scalar(1), Index(i) * stride);
    entries(head, acc.finish(), domain_order + codomain_order);
  }

  std::string take() { return std::move(out_); }

 private:
  std::size_t dim_;
  int conductor_;
  std::string out_;
};

}  // namespace

SpecDocument parse(std::string_view text) { return Parser(text).run(); }

SpecDocument parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string serialize(const SpecDocument& doc) {
  const QuasiHopfData& d = doc.data;
  const AlgebraData& alg = *d.algebra;
  const std::size_t n = alg.dim();
  Writer w(n, doc.conductor);
  w.line("qhspec 1");
  w.line("field " + std::to_string(doc.conductor));
  w.line("dim " + std::to_string(n));
  w.line("basis");
  for (const auto& l : alg.labels()) w.line(l);
  w.line("end");
  if (!doc.generators.empty()) {
    w.line("generators");
    for (std::size_t g : doc.generators) w.line(std::to_string(g));
    w.line("end");
  }
  w.entries("unit", alg.unit(), 1);
  w.map("mul", alg.products(), 2, 1);
  w.map("coproduct", d.coproduct.images(), 1, 2);
  w.entries("counit", d.counit.coeffs(), 1);
  w.map("antipode", d.antipode.images(), 1, 1);
  w.map("antipode_inverse", d.antipode_inverse.images(), 1, 1);
  w.entries("phi", d.phi.coeffs(), 3);
  w.entries("psi", d.psi.coeffs(), 3);
  w.entries("alpha", d.alpha, 1);
  w.entries("beta", d.beta, 1);
  if (d.pivotal) {
    w.entries("pivot", d.pivotal->pivot, 1);
    w.entries("twist", d.pivotal->twist.coeffs(), 2);
    w.entries("twist_inverse", d.pivotal->twist_inverse.coeffs(), 2);
  }
  for (const auto& [name, x] : doc.elements) w.entries("element " + name, x, 1);
  for (const auto& [name, f] : doc.forms) w.entries("form " + name, f.coeffs(), 1);
  return w.take();
}

std::shared_ptr<const QuasiHopfAlgebra> build(const SpecDocument& doc) {
  return std::make_shared<const QuasiHopfAlgebra>(doc.data);
}

int minimal_conductor(const QuasiHopfData& d) {
  int acc = 1;
  for (const auto& p : d.algebra->products()) conductor_of(p, acc);
  conductor_of(d.algebra->unit(), acc);
  for (const auto* op : {&d.coproduct, &d.antipode, &d.antipode_inverse})
    for (const auto& v : op->images()) conductor_of(v, acc);
  conductor_of(d.counit.coeffs(), acc);
  conductor_of(d.phi.coeffs(), acc);
  conductor_of(d.psi.coeffs(), acc);
  conductor_of(d.alpha, acc);
  conductor_of(d.beta, acc);
  if (d.pivotal) {
    conductor_of(d.pivotal->pivot, acc);
    conductor_of(d.pivotal->twist.coeffs(), acc);
    conductor_of(d.pivotal->twist_inverse.coeffs(), acc);
  }
  return acc;
}

SpecDocument from_algebra(const QuasiHopfAlgebra& h) {
  SpecDocument doc;
  doc.data = h.data();
  doc.conductor = minimal_conductor(doc.data);
  for (const Element& g : h.algebra().generators()) {
    if (g.size() != 1 || !g.leading().second.is_one()) {
      doc.generators.clear();
      break;
    }
    doc.generators.push_back(g.leading().first);
  }
  return doc;
}

SpecDocument from_fixture(const sympferm::SFFixture& fx) {
  SpecDocument doc = from_algebra(*fx.H);
  const auto& n = fx.named;
  doc.elements = {{"Lambda", fx.expected.Lambda}, {"e0", n.e0},       {"e1", n.e1},         {"e0+", n.e0_plus},
                  {"e0-", n.e0_minus},           {"e1+", n.e1_plus}, {"e1-", n.e1_minus},  {"x+", n.x_plus},
                  {"x-", n.x_minus},             {"y+", n.y_plus},   {"y-", n.y_minus}};
  doc.forms = {{"lambda", fx.expected.lambda}, {"lambda_hat", fx.expected.lambda_hat}};
  int acc = doc.conductor;
  for (const auto& [name, x] : doc.elements) conductor_of(x, acc);
  for (const auto& [name, f] : doc.forms) conductor_of(f.coeffs(), acc);
  doc.conductor = acc;
  return doc;
}

}  // namespace qhmt::qhspec
