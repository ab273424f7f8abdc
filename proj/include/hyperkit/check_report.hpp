#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elem_set.hpp"
#include "errors.hpp"

namespace hyperkit {

  // The tuple at which an axiom was found to fail.
  struct Witness {
    std::vector<Element> elements;
    std::vector<ElemSet> sets;

    bool operator==(Witness const&) const = default;
  };

  struct Verdict {
    std::string            axiom;
    std::optional<Witness> witness;  // present iff the axiom fails

    bool pass() const noexcept {
      return !witness.has_value();
    }
  };

  class CheckReport {
   public:
    void add(std::string axiom, std::optional<Witness> witness) {
      _verdicts.push_back({std::move(axiom), std::move(witness)});
    }

    void append(CheckReport const& other) {
      _verdicts.insert(
          _verdicts.end(), other._verdicts.begin(), other._verdicts.end());
    }

    std::vector<Verdict> const& verdicts() const noexcept {
      return _verdicts;
    }

    bool passed() const noexcept {
      return std::all_of(_verdicts.begin(),
                         _verdicts.end(),
                         [](Verdict const& v) { return v.pass(); });
    }

    Verdict const* find(std::string const& axiom) const noexcept {
      auto it = std::find_if(_verdicts.begin(),
                             _verdicts.end(),
                             [&](Verdict const& v) { return v.axiom == axiom; });
      return it == _verdicts.end() ? nullptr : &*it;
    }

    bool passed(std::string const& axiom) const noexcept {
      auto const* v = find(axiom);
      return v != nullptr && v->pass();
    }

    std::vector<std::string> failures() const {
      std::vector<std::string> out;
      for (auto const& v : _verdicts) {
        if (!v.pass()) {
          out.push_back(v.axiom);
        }
      }
      return out;
    }

   private:
    std::vector<Verdict> _verdicts;
  };

  inline std::string to_string(Witness const& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.elements.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(w.elements[i]);
    }
    out += ")";
    for (auto const& s : w.sets) {
      out += " " + to_string(s);
    }
    return out;
  }

  // One line per verdict, e.g. "assoc          FAIL (0,1,2)".
  inline std::string to_string(CheckReport const& r) {
    std::string out;
    for (auto const& v : r.verdicts()) {
      std::string name = v.axiom;
      name.resize(std::max<std::size_t>(name.size(), 16), ' ');
      out += name + (v.pass() ? "ok" : "FAIL " + to_string(*v.witness)) + "\n";
    }
    return out;
  }

  // Thrown when a construction is asked to operate on a structure that fails
  // its axioms.
  class AxiomViolation : public Error {
   public:
    AxiomViolation(std::string const& what, CheckReport report)
        : Error(what), _report(std::move(report)) {}

    CheckReport const& report() const noexcept {
      return _report;
    }

   private:
    CheckReport _report;
  };

}  // namespace hyperkit
