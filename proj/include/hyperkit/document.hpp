#pragma once

// The .hstruct structure document: JSON syntax, strict schema.
//
//   {"kind": "bjoin",   "size": n, "labels": [...]?, "bot": b, "table": [[j]]}
//   {"kind": "lmosaic", "size": n, "labels": [...]?, "e": e, "rho": [...],
//    "table": [[[z, ...]]]}
//
// Tables are n x n, row-major; lmosaic cells are nonempty index lists.
// Unknown fields are rejected. Every error carries the 1-based line and
// column of the offending token.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include <json.hpp>

#include "core.hpp"

namespace hyperkit {

  using Structure = std::variant<BJoinSemilattice, LMosaic>;

  namespace detail::doc {

    struct Pos {
      std::size_t line   = 1;
      std::size_t column = 1;
    };

    // Byte iterator that counts how much of the text the lexer has consumed.
    class CountingIterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type        = char;
      using difference_type   = std::ptrdiff_t;
      using pointer           = char const*;
      using reference         = char const&;

      CountingIterator(char const* p, std::size_t* consumed)
          : _p(p), _consumed(consumed) {}

      reference operator*() const {
        return *_p;
      }
      CountingIterator& operator++() {
        ++_p;
        ++*_consumed;
        return *this;
      }
      CountingIterator operator++(int) {
        auto tmp = *this;
        ++*this;
        return tmp;
      }
      bool operator==(CountingIterator const& o) const {
        return _p == o._p;
      }
      bool operator!=(CountingIterator const& o) const {
        return _p != o._p;
      }

     private:
      char const*  _p;
      std::size_t* _consumed;
    };

    struct Node {
      enum class Type { null, boolean, integer, number, string, array, object };

      Type                                     type = Type::null;
      Pos                                      pos;
      std::int64_t                             integer = 0;
      bool                                     boolean = false;
      std::string                              string;
      std::vector<Node>                        items;
      std::vector<std::pair<std::string, Node>> members;
      std::vector<Pos>                         key_pos;
    };

    inline char const* type_name(Node::Type t) {
      switch (t) {
        case Node::Type::null:
          return "null";
        case Node::Type::boolean:
          return "boolean";
        case Node::Type::integer:
          return "integer";
        case Node::Type::number:
          return "number";
        case Node::Type::string:
          return "string";
        case Node::Type::array:
          return "array";
        case Node::Type::object:
          return "object";
      }
      return "?";
    }

    // Builds a Node tree, recording where each token starts.
    class TreeBuilder : public nlohmann::json_sax<nlohmann::json> {
     public:
      TreeBuilder(std::string_view text, std::size_t const* consumed)
          : _text(text), _consumed(consumed) {
        _line_starts.push_back(0);
        for (std::size_t i = 0; i < text.size(); ++i) {
          if (text[i] == '\n') {
            _line_starts.push_back(i + 1);
          }
        }
      }

      Node take() {
        return std::move(_root);
      }

      bool null() override {
        return scalar(Node{});
      }
      bool boolean(bool v) override {
        Node n;
        n.type    = Node::Type::boolean;
        n.boolean = v;
        return scalar(std::move(n));
      }
      bool number_integer(number_integer_t v) override {
        Node n;
        n.type    = Node::Type::integer;
        n.integer = v;
        return scalar(std::move(n));
      }
      bool number_unsigned(number_unsigned_t v) override {
        Node n;
        if (v > static_cast<number_unsigned_t>(INT64_MAX)) {
          n.type = Node::Type::number;
        } else {
          n.type    = Node::Type::integer;
          n.integer = static_cast<std::int64_t>(v);
        }
        return scalar(std::move(n));
      }
      bool number_float(number_float_t, string_t const&) override {
        Node n;
        n.type = Node::Type::number;
        return scalar(std::move(n));
      }
      bool string(string_t& v) override {
        Node n;
        n.type   = Node::Type::string;
        n.string = v;
        return scalar(std::move(n));
      }
      bool binary(binary_t&) override {
        return scalar(Node{});
      }
      bool start_object(std::size_t) override {
        Node n;
        n.type = Node::Type::object;
        n.pos  = token_start();
        mark();
        _stack.push_back(std::move(n));
        return true;
      }
      bool key(string_t& k) override {
        auto& obj = _stack.back();
        auto  pos = token_start(k.size() + 2);
        for (auto const& [name, node] : obj.members) {
          if (name == k) {
            throw ParseError(pos.line, pos.column,
                             "duplicate field \"" + k + "\"");
          }
        }
        obj.members.emplace_back(k, Node{});
        obj.key_pos.push_back(pos);
        mark();
        return true;
      }
      bool end_object() override {
        return close();
      }
      bool start_array(std::size_t) override {
        Node n;
        n.type = Node::Type::array;
        n.pos  = token_start();
        mark();
        _stack.push_back(std::move(n));
        return true;
      }
      bool end_array() override {
        return close();
      }
      bool parse_error(std::size_t, std::string const&,
                       nlohmann::detail::exception const& ex) override {
        auto const& pe  = static_cast<nlohmann::json::parse_error const&>(ex);
        std::string msg = pe.what();
        // strip nlohmann's "[json.exception.parse_error.101] parse error at
        // line 1, column 2: " prefix
        if (auto c = msg.find(": "); c != std::string::npos) {
          msg = msg.substr(c + 2);
        }
        auto const where = to_pos(pe.byte == 0 ? 0 : pe.byte - 1);
        throw ParseError(where.line, where.column, msg);
      }

     private:
      Pos to_pos(std::size_t offset) const {
        auto it = std::upper_bound(
            _line_starts.begin(), _line_starts.end(), offset);
        auto const line = static_cast<std::size_t>(it - _line_starts.begin());
        return {line, offset - _line_starts[line - 1] + 1};
      }

      // Start of the token just reported. Brackets and scalars are found by
      // skipping separators forward from the end of the previous event
      // (number tokens consume one character of lookahead, which is always a
      // separator or closing bracket). Keys are located backwards from the
      // consumed position.
      Pos token_start(std::size_t key_len = 0) const {
        if (key_len != 0) {
          auto const end = *_consumed;
          return to_pos(end >= key_len ? end - key_len : 0);
        }
        std::size_t i = _mark;
        while (i < _text.size()
               && (std::isspace(static_cast<unsigned char>(_text[i]))
                   || _text[i] == ',' || _text[i] == ':')) {
          ++i;
        }
        return to_pos(i);
      }

      void mark() {
        _mark = *_consumed;
      }

      bool scalar(Node n) {
        n.pos = token_start();
        mark();
        attach(std::move(n));
        return true;
      }

      bool close() {
        Node n = std::move(_stack.back());
        _stack.pop_back();
        mark();
        attach(std::move(n));
        return true;
      }

      void attach(Node n) {
        if (_stack.empty()) {
          _root = std::move(n);
          return;
        }
        auto& parent = _stack.back();
        if (parent.type == Node::Type::array) {
          parent.items.push_back(std::move(n));
        } else {
          parent.members.back().second = std::move(n);
        }
      }

      std::string_view         _text;
      std::size_t const*       _consumed;
      std::vector<std::size_t> _line_starts;
      std::size_t              _mark = 0;
      std::vector<Node>        _stack;
      Node                     _root;
    };

    [[noreturn]] inline void fail(Pos p, std::string const& msg) {
      throw ParseError(p.line, p.column, msg);
    }

    inline void expect(Node const& n, Node::Type t, std::string const& what) {
      if (n.type != t) {
        fail(n.pos,
             what + " must be " + (t == Node::Type::integer ? "an " : "a ")
                 + type_name(t) + ", found " + type_name(n.type));
      }
    }

    inline Element index(Node const& n, std::size_t size,
                         std::string const& what) {
      expect(n, Node::Type::integer, what);
      if (n.integer < 0 || static_cast<std::uint64_t>(n.integer) >= size) {
        fail(n.pos,
             "index " + std::to_string(n.integer) + " out of range in " + what
                 + " (size " + std::to_string(size) + ")");
      }
      return static_cast<Element>(n.integer);
    }

    inline std::string cell_name(std::size_t x, std::size_t y) {
      return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }

    // Table rows as a square n x n array of nodes.
    inline std::vector<Node const*> square(Node const& table, std::size_t n) {
      expect(table, Node::Type::array, "table");
      if (table.items.size() != n) {
        fail(table.pos, "table has " + std::to_string(table.items.size())
                            + " rows, expected " + std::to_string(n));
      }
      std::vector<Node const*> cells;
      for (std::size_t x = 0; x < n; ++x) {
        auto const& row = table.items[x];
        expect(row, Node::Type::array, "table row " + std::to_string(x));
        if (row.items.size() != n) {
          fail(row.pos, "table row " + std::to_string(x) + " has "
                            + std::to_string(row.items.size())
                            + " entries, expected " + std::to_string(n));
        }
        for (auto const& c : row.items) {
          cells.push_back(&c);
        }
      }
      return cells;
    }

    inline Structure build(Node const& root) {
      expect(root, Node::Type::object, "document");
      auto field = [&](std::string const& k) -> Node const* {
        for (auto const& [name, node] : root.members) {
          if (name == k) {
            return &node;
          }
        }
        return nullptr;
      };
      auto require = [&](std::string const& k) -> Node const& {
        auto const* n = field(k);
        if (n == nullptr) {
          fail(root.pos, "missing field \"" + k + "\"");
        }
        return *n;
      };

      auto const& kind_node = require("kind");
      expect(kind_node, Node::Type::string, "kind");
      auto const& kind = kind_node.string;
      if (kind != "bjoin" && kind != "lmosaic") {
        fail(kind_node.pos,
             "kind must be \"bjoin\" or \"lmosaic\", found \"" + kind + "\"");
      }
      bool const mosaic = kind == "lmosaic";

      std::unordered_set<std::string> const allowed
          = mosaic ? std::unordered_set<std::string>{"kind", "size", "labels",
                                                     "e", "rho", "table"}
                   : std::unordered_set<std::string>{
                       "kind", "size", "labels", "bot", "table"};
      for (std::size_t i = 0; i < root.members.size(); ++i) {
        if (!allowed.contains(root.members[i].first)) {
          fail(root.key_pos[i],
               "unknown field \"" + root.members[i].first + "\" for kind "
                   + kind);
        }
      }

      auto const& size_node = require("size");
      expect(size_node, Node::Type::integer, "size");
      if (size_node.integer < 1
          || size_node.integer > static_cast<std::int64_t>(kMaxCarrier)) {
        fail(size_node.pos, "size must be in [1, 64], found "
                                + std::to_string(size_node.integer));
      }
      auto const n = static_cast<std::size_t>(size_node.integer);

      std::optional<Carrier> carrier;
      if (auto const* labels = field("labels")) {
        expect(*labels, Node::Type::array, "labels");
        if (labels->items.size() != n) {
          fail(labels->pos, "labels has " + std::to_string(labels->items.size())
                                + " entries, expected " + std::to_string(n));
        }
        std::vector<std::string>        names;
        std::unordered_set<std::string> seen;
        for (auto const& l : labels->items) {
          expect(l, Node::Type::string, "label");
          if (!seen.insert(l.string).second) {
            fail(l.pos, "duplicate label \"" + l.string + "\"");
          }
          names.push_back(l.string);
        }
        carrier.emplace(n, std::move(names));
      } else {
        carrier.emplace(n);
      }

      auto const cells = square(require("table"), n);

      if (!mosaic) {
        auto const           bot = index(require("bot"), n, "bot");
        std::vector<Element> join;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          join.push_back(index(*cells[i], n, "table cell " + cell_name(i / n, i % n)));
        }
        return BJoinSemilattice(
            std::move(*carrier), BinOpTable(n, std::move(join)), bot);
      }

      auto const  e        = index(require("e"), n, "e");
      auto const& rho_node = require("rho");
      expect(rho_node, Node::Type::array, "rho");
      if (rho_node.items.size() != n) {
        fail(rho_node.pos, "rho has " + std::to_string(rho_node.items.size())
                               + " entries, expected " + std::to_string(n));
      }
      std::vector<Element> rho;
      for (auto const& r : rho_node.items) {
        rho.push_back(index(r, n, "rho"));
      }
      std::vector<ElemSet> sets;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        auto const  where = cell_name(i / n, i % n);
        auto const& c     = *cells[i];
        expect(c, Node::Type::array, "table cell " + where);
        if (c.items.empty()) {
          fail(c.pos, "empty hyperoperation cell at " + where);
        }
        ElemSet s;
        for (auto const& z : c.items) {
          auto const v = index(z, n, "table cell " + where);
          if (s.contains(v)) {
            fail(z.pos, "duplicate element " + std::to_string(v)
                            + " in hyperoperation cell at " + where);
          }
          s.insert(v);
        }
        sets.push_back(s);
      }
      return LMosaic(
          std::move(*carrier), HyperOpTable(n, std::move(sets)), e,
          std::move(rho));
    }

  }  // namespace detail::doc

  // Parses one structure document. Shape errors are ParseErrors carrying a
  // position; no axiom is checked.
  inline Structure parse_structure(std::string_view text) {
    std::size_t                    consumed = 0;
    detail::doc::TreeBuilder       builder(text, &consumed);
    detail::doc::CountingIterator first(text.data(), &consumed);
    detail::doc::CountingIterator last(text.data() + text.size(), &consumed);
    nlohmann::json::sax_parse(first, last, &builder);
    return detail::doc::build(builder.take());
  }

  namespace detail::doc {
    inline std::string quoted(std::string const& s) {
      return nlohmann::json(s).dump();
    }

    template <typename T, typename F>
    std::string list(std::vector<T> const& xs, F&& show) {
      std::string out = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ", ") + show(xs[i]);
      }
      return out + "]";
    }

    inline std::string labels_line(Carrier const& c) {
      if (!c.has_labels()) {
        return "";
      }
      return "  \"labels\": " + list(*c.labels(), quoted) + ",\n";
    }

    inline std::string element(Element x) {
      return std::to_string(x);
    }
  }  // namespace detail::doc

  // Deterministic: keys sorted, one table row per line, set cells ascending.
  inline std::string serialize_structure(BJoinSemilattice const& s) {
    using namespace detail::doc;
    auto const  n   = s.size();
    std::string out = "{\n";
    out += "  \"bot\": " + std::to_string(s.bot()) + ",\n";
    out += "  \"kind\": \"bjoin\",\n";
    out += labels_line(s.carrier());
    out += "  \"size\": " + std::to_string(n) + ",\n";
    out += "  \"table\": [\n";
    for (Element x = 0; x < n; ++x) {
      std::vector<Element> row(s.table().cells().begin() + x * n,
                               s.table().cells().begin() + (x + 1) * n);
      out += "    " + list(row, element) + (x + 1 < n ? ",\n" : "\n");
    }
    out += "  ]\n}\n";
    return out;
  }

  inline std::string serialize_structure(LMosaic const& m) {
    using namespace detail::doc;
    auto const  n   = m.size();
    std::string out = "{\n";
    out += "  \"e\": " + std::to_string(m.e()) + ",\n";
    out += "  \"kind\": \"lmosaic\",\n";
    out += labels_line(m.carrier());
    out += "  \"rho\": " + list(m.rho(), element) + ",\n";
    out += "  \"size\": " + std::to_string(n) + ",\n";
    out += "  \"table\": [\n";
    for (Element x = 0; x < n; ++x) {
      std::vector<ElemSet> row(m.table().cells().begin() + x * n,
                               m.table().cells().begin() + (x + 1) * n);
      out += "    " + list(row, [](ElemSet s) {
               return list(s.to_vector(), element);
             }) + (x + 1 < n ? ",\n" : "\n");
    }
    out += "  ]\n}\n";
    return out;
  }

  inline std::string serialize_structure(Structure const& s) {
    return std::visit([](auto const& x) { return serialize_structure(x); }, s);
  }

}  // namespace hyperkit
