#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freeprob/cumulants.hpp"
#include "freeprob/exactcount.hpp"
#include "freeprob/graphs.hpp"
#include "freeprob/laws.hpp"
#include "freeprob/randmat.hpp"
#include "freeprob/series.hpp"
#include "freeprob/weingarten.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace freeprob;

namespace {

// exact values cross the boundary as fractions.Fraction / arbitrary ints
py::object to_frac(const Rat& r) {
    return py::module_::import("fractions").attr("Fraction")(rat_str(r));
}

py::object to_pyint(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

Rat as_rat(const py::handle& h) { return rat_parse(py::str(h).cast<std::string>()); }

py::list frac_list(const std::vector<Rat>& v) {
    py::list out;
    for (const auto& r : v) out.append(to_frac(r));
    return out;
}

py::list int_list(const std::vector<Int>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_pyint(x));
    return out;
}

ColoredWord word_arg(const std::string& colors, long k) {
    return colors.empty() ? ColoredWord::all_white((int)k) : ColoredWord::parse(colors);
}

Category category_arg(const std::string& name, long s) { return Category::parse(name, s); }

Flavor flavor_arg(const std::string& name) {
    if (name == "classical") return Flavor::classical;
    if (name == "free") return Flavor::free;
    throw std::invalid_argument("flavor must be 'classical' or 'free'");
}

MomentSequence moments_arg(const py::sequence& seq) {
    MomentSequence m;
    for (auto h : seq) m.m.push_back(as_rat(h));
    return m;
}

DiscreteMeasure measure_arg(const std::vector<std::pair<py::object, py::object>>& atoms) {
    DiscreteMeasure rho;
    for (const auto& [loc, mass] : atoms) rho.atoms.emplace_back(as_rat(loc), as_rat(mass));
    return rho;
}

LawSpec law_arg(const std::string& family, const std::string& t, const std::string& s,
                const std::string& c, long N,
                const std::vector<std::pair<py::object, py::object>>& rho) {
    Rat sv = s == "inf" ? Rat(kInfinity) : rat_parse(s);
    return LawSpec::parse(family, rat_parse(t), sv, rat_parse(c), N, measure_arg(rho));
}

EnsembleSpec ensemble_arg(const std::string& kind, long N, long M, double t, long d, long n,
                          long m, const std::string& map) {
    return EnsembleSpec::parse(kind, N, M, t, d, n, m, map);
}

py::dict stats_dict(const MomentStats& st) {
    py::dict d;
    d["mean"] = st.mean;
    d["stderr"] = st.stderr_;
    d["trials"] = st.trials;
    return d;
}

RootedBipartiteGraph graph_arg(const std::string& name, long depth) {
    return ade_graph(name, depth);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact free-probability and Weingarten calculus kernels";
    m.attr("__version__") = "0.1.0";

    // ---- exact counting -------------------------------------------------
    m.def("catalan", [](long k) { return to_pyint(catalan(k)); }, py::arg("k"));
    m.def("bell", [](long k) { return to_pyint(bell(k)); }, py::arg("k"));
    m.def("stirling2", [](long r, long b) { return to_pyint(stirling2(r, b)); },
          py::arg("r"), py::arg("b"));
    m.def("fuss_catalan",
          [](const py::object& s, long k) { return to_frac(fuss_catalan(as_rat(s), k)); },
          py::arg("s"), py::arg("k"));
    m.def("fuss_narayana",
          [](const py::object& s, long k, const py::object& t) {
              return to_frac(fuss_narayana(as_rat(s), k, as_rat(t)));
          },
          py::arg("s"), py::arg("k"), py::arg("t"));
    m.def("derangement_profile",
          [](long N, long r) { return to_frac(derangement_profile(N, r)); },
          py::arg("N"), py::arg("r"));
    m.def("poker_probabilities",
          [](bool enumerated) {
              py::list out;
              for (const auto& [name, p] :
                   enumerated ? poker_probabilities_enumerated() : poker_probabilities())
                  out.append(py::make_tuple(name, to_frac(p)));
              return out;
          },
          py::arg("enumerated") = false);
    m.def("sphere_volume_ratio",
          [](long N) {
              auto [c, e] = sphere_volume_ratio(N);
              return py::make_tuple(to_frac(c), e);
          },
          py::arg("N"),
          "coefficient and exponent of vol(B^N)/2^N = c (pi/2)^e");

    // ---- partitions ------------------------------------------------------
    m.def("count_partitions",
          [](const std::string& category, long k, const std::string& colors, long s) {
              return to_pyint(count_cat(category_arg(category, s),
                                        word_arg(colors, k)));
          },
          py::arg("category"), py::arg("k") = 0, py::arg("colors") = "", py::arg("s") = 1);
    m.def("enumerate_partitions",
          [](const std::string& category, long k, const std::string& colors, long s) {
              std::vector<std::vector<int>> out;
              for (auto& p : enumerate_cat(category_arg(category, s), word_arg(colors, k)))
                  out.push_back(std::move(p.rgs));
              return out;
          },
          py::arg("category"), py::arg("k") = 0, py::arg("colors") = "", py::arg("s") = 1,
          "partitions as restricted-growth strings, canonical order");
    m.def("partition_str",
          [](std::vector<int> rgs) { return rgs_checked(std::move(rgs)).str(); },
          py::arg("rgs"));
    m.def("partition_blocks",
          [](std::vector<int> rgs) { return rgs_checked(std::move(rgs)).block_list(); },
          py::arg("rgs"), "0-based point positions per block");
    m.def("in_category",
          [](std::vector<int> rgs, const std::string& category, const std::string& colors,
             long s) {
              auto p = rgs_checked(std::move(rgs));
              return in_category(p, category_arg(category, s), word_arg(colors, p.size()));
          },
          py::arg("rgs"), py::arg("category"), py::arg("colors") = "", py::arg("s") = 1);
    m.def("leq",
          [](std::vector<int> a, std::vector<int> b) {
              return leq(rgs_checked(std::move(a)), rgs_checked(std::move(b)));
          },
          py::arg("a"), py::arg("b"));
    m.def("join",
          [](std::vector<int> a, std::vector<int> b) {
              return join(rgs_checked(std::move(a)), rgs_checked(std::move(b))).rgs;
          },
          py::arg("a"), py::arg("b"));
    m.def("meet",
          [](std::vector<int> a, std::vector<int> b) {
              return meet(rgs_checked(std::move(a)), rgs_checked(std::move(b))).rgs;
          },
          py::arg("a"), py::arg("b"));
    m.def("mobius",
          [](std::vector<int> a, std::vector<int> b, bool nc) {
              return to_pyint(
                  mobius(rgs_checked(std::move(a)), rgs_checked(std::move(b)), nc));
          },
          py::arg("a"), py::arg("b"), py::arg("nc") = false);
    m.def("kernel", [](const std::vector<long>& idx) { return kernel(idx).rgs; },
          py::arg("indices"));
    m.def("fatten", [](std::vector<int> rgs) { return fatten(rgs_checked(std::move(rgs))).rgs; },
          py::arg("rgs"));
    m.def("shrink", [](std::vector<int> rgs) { return shrink(rgs_checked(std::move(rgs))).rgs; },
          py::arg("rgs"));
    m.def("is_noncrossing",
          [](std::vector<int> rgs) { return is_noncrossing(rgs_checked(std::move(rgs))); },
          py::arg("rgs"));
    m.def("even_block_count",
          [](std::vector<int> rgs) { return even_block_count(rgs_checked(std::move(rgs))); },
          py::arg("rgs"));

    // ---- moment/cumulant machinery --------------------------------------
    m.def("moments_from_cumulants",
          [](const py::sequence& cumulants, const std::string& flavor) {
              CumulantSequence c;
              c.flavor = flavor_arg(flavor);
              for (auto h : cumulants) c.c.push_back(as_rat(h));
              return frac_list(moments_from_cumulants(c).m);
          },
          py::arg("cumulants"), py::arg("flavor") = "free");
    m.def("cumulants_from_moments",
          [](const py::sequence& moments, const std::string& flavor) {
              return frac_list(cumulants_from_moments(moments_arg(moments),
                                                      flavor_arg(flavor)).c);
          },
          py::arg("moments"), py::arg("flavor") = "free");
    m.def("bercovici_pata",
          [](const py::sequence& moments, const std::string& from, const std::string& to) {
              return frac_list(
                  bercovici_pata(moments_arg(moments), flavor_arg(from), flavor_arg(to)).m);
          },
          py::arg("moments"), py::arg("from_flavor"), py::arg("to_flavor"));
    m.def("partition_weighted_moment",
          [](const std::string& category, const py::object& t, long k,
             const std::string& colors, long s) {
              return to_frac(partition_weighted_moment(category_arg(category, s), as_rat(t),
                                                       word_arg(colors, k)));
          },
          py::arg("category"), py::arg("t"), py::arg("k") = 0, py::arg("colors") = "",
          py::arg("s") = 1);

    // ---- transforms ------------------------------------------------------
    m.def("cauchy_from_moments",
          [](const py::sequence& moments) {
              return frac_list(cauchy_from_moments(moments_arg(moments)).c);
          },
          py::arg("moments"), "coefficients of xi^-1, xi^-2, ... with a leading zero");
    m.def("r_from_moments",
          [](const py::sequence& moments) {
              return frac_list(r_from_moments(moments_arg(moments)).c);
          },
          py::arg("moments"));
    m.def("s_from_moments",
          [](const py::sequence& moments) {
              return frac_list(s_from_moments(moments_arg(moments)).c);
          },
          py::arg("moments"));
    m.def("free_additive_convolution",
          [](const py::sequence& a, const py::sequence& b) {
              return frac_list(free_additive_convolution(moments_arg(a), moments_arg(b)).m);
          },
          py::arg("a"), py::arg("b"));
    m.def("free_multiplicative_convolution",
          [](const py::sequence& a, const py::sequence& b) {
              return frac_list(
                  free_multiplicative_convolution(moments_arg(a), moments_arg(b)).m);
          },
          py::arg("a"), py::arg("b"));
    m.def("classical_convolution",
          [](const py::sequence& a, const py::sequence& b) {
              return frac_list(classical_convolution(moments_arg(a), moments_arg(b)).m);
          },
          py::arg("a"), py::arg("b"));
    m.def("hankel_check",
          [](const py::sequence& moments) {
              auto r = hankel_check(moments_arg(moments));
              return py::make_tuple(r.ok, r.first_failure);
          },
          py::arg("moments"), "(ok, first failing dimension or -1)");

    // ---- laws -------------------------------------------------------------
    m.def("law_moment",
          [](const std::string& family, long k, const std::string& t, const std::string& s,
             const std::string& c, long N,
             const std::vector<std::pair<py::object, py::object>>& rho) {
              return to_frac(law_moment(law_arg(family, t, s, c, N, rho), k));
          },
          py::arg("family"), py::arg("k"), py::arg("t") = "1", py::arg("s") = "1",
          py::arg("c") = "0", py::arg("N") = 0,
          py::arg("rho") = std::vector<std::pair<py::object, py::object>>{});
    m.def("law_word_moment",
          [](const std::string& family, const std::string& colors, const std::string& t) {
              LawSpec law = law_arg(family, t, "1", "0", 0, {});
              return to_frac(law_moment(law, ColoredWord::parse(colors)));
          },
          py::arg("family"), py::arg("colors"), py::arg("t") = "1");
    m.def("law_atoms",
          [](const std::string& family, const std::string& t, const std::string& s,
             const std::string& c, long N) {
              return law_atoms(law_arg(family, t, s, c, N, {}));
          },
          py::arg("family"), py::arg("t") = "1", py::arg("s") = "1", py::arg("c") = "0",
          py::arg("N") = 0);
    m.def("compound_poisson",
          [](const std::vector<std::pair<py::object, py::object>>& rho,
             const std::string& flavor, long order) {
              return frac_list(
                  compound_poisson(measure_arg(rho), flavor_arg(flavor), order).m);
          },
          py::arg("rho"), py::arg("flavor"), py::arg("order"));
    m.def("free_hyperspherical_moment", &free_hyperspherical_moment, py::arg("N"),
          py::arg("l"));

    // ---- Weingarten calculus ----------------------------------------------
    m.def("integrate_monomial",
          [](const std::string& group, long N, const std::vector<long>& rows,
             const std::vector<long>& cols, const std::string& colors) {
              return to_frac(integrate_monomial(EasyGroup::parse(group), N, rows, cols,
                                                word_arg(colors, (long)rows.size())));
          },
          py::arg("group"), py::arg("N"), py::arg("rows"), py::arg("cols"),
          py::arg("colors") = "");
    m.def("integrate_sn",
          [](long N, const std::vector<long>& rows, const std::vector<long>& cols) {
              return to_frac(integrate_sn(N, rows, cols));
          },
          py::arg("N"), py::arg("rows"), py::arg("cols"));
    m.def("weingarten_table",
          [](const std::string& group, long N, long k, const std::string& colors) {
              auto g = EasyGroup::parse(group);
              auto word = colors.empty() ? default_word(g, k) : ColoredWord::parse(colors);
              auto table = weingarten(g, word, N);
              py::list basis;
              for (const auto& p : table->basis) basis.append(py::cast(p.rgs));
              auto matrix = [](const std::vector<std::vector<Rat>>& rows) {
                  py::list out;
                  for (const auto& row : rows) out.append(frac_list(row));
                  return out;
              };
              py::dict d;
              d["group"] = table->group.name();
              d["word"] = table->word.str();
              d["N"] = table->N;
              d["basis"] = basis;
              d["gram"] = matrix(table->gram);
              d["weingarten"] = matrix(table->wg);
              return d;
          },
          py::arg("group"), py::arg("N"), py::arg("k") = 0, py::arg("colors") = "");
    m.def("gram_determinant",
          [](long k, long N) { return to_pyint(gram_determinant(k, N)); },
          py::arg("k"), py::arg("N"));
    m.def("sphere_integrate",
          [](bool complex_field, long N, const std::vector<long>& exponents) {
              return to_frac(sphere_integrate(complex_field, N, exponents));
          },
          py::arg("complex"), py::arg("N"), py::arg("exponents"));
    m.def("truncated_character_moment",
          [](const std::string& group, long N, const py::object& t, long k) {
              return to_frac(
                  truncated_character_moment(EasyGroup::parse(group), N, as_rat(t), k));
          },
          py::arg("group"), py::arg("N"), py::arg("t"), py::arg("k"));

    // ---- random matrices ---------------------------------------------------
    m.def("mix64", &mix64, py::arg("x"));
    m.def("trial_seed", &trial_seed, py::arg("master"), py::arg("trial"));
    m.def("empirical_moments",
          [](const std::string& kind, std::uint64_t seed, long trials, long max_order, long N,
             long M, double t, long d, long n, long mm, const std::string& map,
             std::optional<double> scale) {
              auto spec = ensemble_arg(kind, N, M, t, d, n, mm, map);
              py::list out;
              for (const auto& st :
                   empirical_moments(spec, expand_seeds(seed, trials), max_order, scale))
                  out.append(stats_dict(st));
              return out;
          },
          py::arg("kind"), py::arg("seed"), py::arg("trials"), py::arg("max_order"),
          py::arg("N") = 0, py::arg("M") = 0, py::arg("t") = 1.0, py::arg("d") = 0,
          py::arg("n") = 0, py::arg("m") = 0, py::arg("map") = "identity",
          py::arg("scale") = std::nullopt);
    m.def("empirical_colored_moment",
          [](const std::string& kind, std::uint64_t seed, long trials,
             const std::string& colors, long N, long M, double t, long d, long n, long mm,
             const std::string& map, std::optional<double> scale) {
              auto spec = ensemble_arg(kind, N, M, t, d, n, mm, map);
              return stats_dict(empirical_colored_moment(spec, expand_seeds(seed, trials),
                                                         ColoredWord::parse(colors), scale));
          },
          py::arg("kind"), py::arg("seed"), py::arg("trials"), py::arg("colors"),
          py::arg("N") = 0, py::arg("M") = 0, py::arg("t") = 1.0, py::arg("d") = 0,
          py::arg("n") = 0, py::arg("m") = 0, py::arg("map") = "identity",
          py::arg("scale") = std::nullopt);

    // ---- rooted bipartite graphs --------------------------------------------
    m.def("loop_count",
          [](const std::string& name, long n, long depth) {
              return to_pyint(loop_count(graph_arg(name, depth), n));
          },
          py::arg("name"), py::arg("n"), py::arg("depth") = 0);
    m.def("poincare",
          [](const std::string& name, long order, long depth) {
              return int_list(poincare(graph_arg(name, depth), order));
          },
          py::arg("name"), py::arg("order"), py::arg("depth") = 0);
    m.def("theta",
          [](const std::string& name, long order, long depth) {
              auto g = graph_arg(name, depth);
              return int_list(theta_from_poincare(poincare(g, order), order));
          },
          py::arg("name"), py::arg("order"), py::arg("depth") = 0);
    m.def("circular_even_moments",
          [](const std::string& name, long order, long depth) {
              return frac_list(circular_even_moments(graph_arg(name, depth), order));
          },
          py::arg("name"), py::arg("order"), py::arg("depth") = 0);
}
