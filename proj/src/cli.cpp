#include "toricalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "toricalc/errors.hpp"
#include "toricalc/git_toric.hpp"
#include "toricalc/json_io.hpp"

namespace toricalc::cli {

namespace {

using json_io::json;

struct Options {
  std::string verb;
  std::optional<std::string> polytope;
  std::optional<std::string> action;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> bound;
  std::optional<std::string> support;
  std::optional<std::string> point;
};

class Context {
public:
  Context(const Options& opts, std::istream& in) : opts_(opts), in_(in) {}

  json read(const std::string& path) const {
    try {
      if (path == "-") return json::parse(in_);
      std::ifstream f(path);
      if (!f) throw std::invalid_argument("cannot open " + path);
      return json::parse(f);
    } catch (const json::exception& e) {
      throw std::invalid_argument(path + ": " + e.what());
    }
  }

  LinearizedAction action() const {
    if (!opts_.action) throw std::invalid_argument("--action is required");
    return json_io::parse_action(read(*opts_.action));
  }

  /// --polytope, or the polyhedron of --action.
  Polyhedron polytope() const {
    if (opts_.polytope) return json_io::parse_polyhedron(read(*opts_.polytope));
    if (opts_.action) return delta(action());
    throw std::invalid_argument("--polytope or --action is required");
  }

  std::size_t degree() const {
    if (!opts_.degree) throw std::invalid_argument("--degree is required");
    return *opts_.degree;
  }

  std::size_t bound() const {
    if (!opts_.bound) throw std::invalid_argument("--bound is required");
    return *opts_.bound;
  }

  const Options& options() const { return opts_; }

private:
  const Options& opts_;
  std::istream& in_;
};

json count_or_string(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

using Handler = std::function<json(const Context&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"delta", [](const Context& c) { return json_io::to_json(delta(c.action())); }},
      {"group",
       [](const Context& c) { return json_io::to_json(group_from_delta(c.polytope())); }},
      {"generators",
       [](const Context& c) {
         json gens = json::array();
         for (const auto& g : graded_generators(c.polytope())) gens.push_back(json_io::to_json(g));
         return json{{"generators", gens}};
       }},
      {"hilbert",
       [](const Context& c) {
         std::size_t r = c.degree();
         return json{{"degree", r}, {"value", hilbert_function(c.polytope(), r)}};
       }},
      {"relations",
       [](const Context& c) { return json_io::to_json(relation_space(c.polytope(), c.bound())); }},
      {"semistable",
       [](const Context& c) {
         LinearizedAction a = c.action();
         Support s = json_io::parse_support(c.options().support.value_or(""), a.n);
         return json{{"support", json_io::to_json(s)}, {"semistable", is_semistable(a, s)}};
       }},
      {"unstable",
       [](const Context& c) {
         json list = json::array();
         for (const auto& s : minimal_unstable_supports(c.action()))
           list.push_back(json_io::to_json(s));
         return json{{"minimal_unstable_supports", list}};
       }},
      {"fvector",
       [](const Context& c) {
         FVector f = f_vector(c.polytope());
         return json{{"f_vector", f.counts}, {"simple", f.is_simple}};
       }},
      {"betti",
       [](const Context& c) {
         BettiNumbers b = betti(c.polytope());
         json values = json::array();
         for (const auto& x : b.values) values.push_back(count_or_string(x));
         return json{{"betti", values}, {"bounded", b.bounded}};
       }},
      {"census",
       [](const Context& c) {
         json orbits = json::object();
         for (const auto& [dim, count] : orbit_census(c.polytope()))
           orbits[std::to_string(dim)] = count;
         return json{{"orbits", orbits}};
       }},
      {"evaluate",
       [](const Context& c) {
         LinearizedAction a = c.action();
         if (!c.options().point) throw std::invalid_argument("--point is required");
         RatVector x = json_io::parse_point(*c.options().point);
         auto values = evaluate_invariants(a, x, c.options().bound.value_or(SIZE_MAX));
         json list = json::array();
         bool semistable = false;
         for (const auto& v : values) {
           list.push_back({{"value", json_io::to_json(v.value)}, {"degree", v.degree}});
           if (v.degree > 0 && v.value != 0) semistable = true;
         }
         return json{{"values", list}, {"semistable", semistable}};
       }},
  };
  return table;
}

} // namespace

int execute(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Projective GIT quotients of affine space by subtori", "toricalc"};
  std::vector<std::string> verbs;
  for (const auto& [name, _] : handlers()) verbs.push_back(name);
  app.add_option("verb", opts.verb, "Command to run")
      ->required()
      ->check(CLI::IsMember(verbs));
  app.add_option("--polytope", opts.polytope, "Polyhedron JSON file ('-' for stdin)");
  app.add_option("--action", opts.action, "Action JSON file ('-' for stdin)");
  app.add_option("--degree", opts.degree, "Degree r");
  app.add_option("--bound", opts.bound, "Degree bound D");
  app.add_option("--support", opts.support, "1-based vanishing coordinates, e.g. 1,2");
  app.add_option("--point", opts.point, "Point coordinates, fractions allowed, e.g. 1,1/2");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "MalformedInput: " << e.what() << '\n';
    return kMalformedInput;
  }

  try {
    Context ctx(opts, in);
    json result = handlers().at(opts.verb)(ctx);
    out << result.dump(2) << '\n';
    return kOk;
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "MalformedInput: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const json_io::json::exception& e) {
    err << "MalformedInput: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << '\n';
    return kInternalError;
  }
}

} // namespace toricalc::cli
