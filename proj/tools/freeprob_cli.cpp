// freeprob: batch front end over the library.  One subcommand per run; every
// run echoes its resolved configuration, rationals print as "p/q", color
// words use o/b.  Exit codes: 0 ok, 1 computation error, 2 usage error.

#include "freeprob/acceptance.hpp"
#include "freeprob/cumulants.hpp"
#include "freeprob/exactcount.hpp"
#include "freeprob/graphs.hpp"
#include "freeprob/laws.hpp"
#include "freeprob/partition.hpp"
#include "freeprob/randmat.hpp"
#include "freeprob/rational.hpp"
#include "freeprob/series.hpp"
#include "freeprob/weingarten.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace freeprob;

namespace {

// a bad flag value; anything the math layer throws is a computation error
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

std::vector<long> long_list(const std::string& s, const char* flag) {
    std::vector<long> out;
    for (const auto& tok : split(s, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stol(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": cannot parse integer '" + tok + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
    return out;
}

std::vector<Rat> rat_list(const std::string& s, const char* flag) {
    std::vector<Rat> out;
    for (const auto& tok : split(s, ','))
        out.push_back(as_usage([&] { return rat_parse(tok); }));
    if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
    return out;
}

std::vector<std::uint64_t> seed_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    for (const auto& tok : split(s, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoull(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("--seeds: cannot parse seed '" + tok + "'");
        }
    }
    if (out.empty()) throw UsageError("--seeds: empty list");
    return out;
}

Partition parse_rgs(const std::string& s, const char* flag) {
    auto labels = long_list(s, flag);
    std::vector<int> r(labels.begin(), labels.end());
    return as_usage([&] { return rgs_checked(std::move(r)); });
}

ColoredWord parse_word(const std::string& s) {
    return as_usage([&] { return ColoredWord::parse(s); });
}

// "a:b:step", endpoints inclusive
std::vector<double> parse_grid(const std::string& s) {
    auto parts = split(s, ':');
    if (parts.size() != 3) throw UsageError("--grid: expected a:b:step");
    double a, b, step;
    try {
        a = std::stod(parts[0]);
        b = std::stod(parts[1]);
        step = std::stod(parts[2]);
    } catch (const std::exception&) {
        throw UsageError("--grid: cannot parse '" + s + "'");
    }
    if (step <= 0 || b < a) throw UsageError("--grid: need a <= b and step > 0");
    std::vector<double> out;
    for (long i = 0;; ++i) {
        double x = a + step * (double)i;
        if (x > b + step * 1e-9) break;
        out.push_back(x);
    }
    return out;
}

// index pattern "u[1,1]u[1,2]*" -> rows/cols/colors, * marking conjugates
void parse_pattern(const std::string& s, std::vector<long>& rows, std::vector<long>& cols,
                   ColoredWord& colors) {
    rows.clear();
    cols.clear();
    colors.w.clear();
    size_t i = 0;
    auto fail = [&] { throw UsageError("--pattern: expected factors like u[1,2]* near position " +
                                       std::to_string(i) + " of '" + s + "'"); };
    while (i < s.size()) {
        if (s[i] == ' ') { ++i; continue; }
        if (!std::isalpha((unsigned char)s[i])) fail();
        ++i;
        if (i >= s.size() || s[i] != '[') fail();
        ++i;
        auto read_long = [&] {
            size_t start = i;
            while (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '-')) ++i;
            if (i == start) fail();
            return std::stol(s.substr(start, i - start));
        };
        rows.push_back(read_long());
        if (i >= s.size() || s[i] != ',') fail();
        ++i;
        cols.push_back(read_long());
        if (i >= s.size() || s[i] != ']') fail();
        ++i;
        if (i < s.size() && s[i] == '*') {
            colors.w.push_back(Color::black);
            ++i;
        } else {
            colors.w.push_back(Color::white);
        }
    }
    if (rows.empty()) throw UsageError("--pattern: empty pattern");
}

// "loc:mass,loc:mass"
DiscreteMeasure parse_rho(const std::string& s) {
    DiscreteMeasure rho;
    for (const auto& tok : split(s, ',')) {
        auto parts = split(tok, ':');
        if (parts.size() != 2) throw UsageError("--rho: expected loc:mass pairs, got '" + tok + "'");
        rho.atoms.emplace_back(as_usage([&] { return rat_parse(parts[0]); }),
                               as_usage([&] { return rat_parse(parts[1]); }));
    }
    return rho;
}

std::string dbl_str(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json int_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

json rats_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rat_str(r));
    return a;
}

json ints_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(int_json(r));
    return a;
}

json partition_json(const Partition& p) {
    return json{{"rgs", p.rgs}, {"str", p.str()}, {"blocks", p.blocks()}};
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
    }
    return q + "\"";
}

struct Output {
    json config = json::object();
    json payload = json::object();
    // populated when the subcommand has a natural tabular form
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::vector<std::string> csv_comments;
};

void emit(const Output& out, const std::string& format) {
    if (format == "csv") {
        for (const auto& [k, v] : out.config.items())
            std::cout << "# " << k << "="
                      << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        for (const auto& line : out.csv_comments) std::cout << "# " << line << "\n";
        if (!out.csv_header.empty()) {
            for (size_t i = 0; i < out.csv_header.size(); ++i)
                std::cout << (i ? "," : "") << csv_quote(out.csv_header[i]);
            std::cout << "\n";
            for (const auto& row : out.csv_rows) {
                for (size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? "," : "") << csv_quote(row[i]);
                std::cout << "\n";
            }
        } else {
            // generic key,value fallback for scalar payloads
            std::cout << "key,value\n";
            for (const auto& [k, v] : out.payload.items())
                std::cout << csv_quote(k) << ","
                          << csv_quote(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
        return;
    }
    json j = json::object();
    j["config"] = out.config;
    for (const auto& [k, v] : out.payload.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------- partitions

struct PartitionsOpts {
    std::string op = "list";
    bool count_flag = false;
    std::string cat, colors, a, b, p, idx;
    long s = 1, k = -1;
    bool nc = false;
    std::string format = "json";
};

Output run_partitions(const PartitionsOpts& o) {
    Output out;
    std::string op = o.count_flag ? "count" : o.op;
    out.config["command"] = "partitions";
    out.config["op"] = op;

    auto need_cat_word = [&]() -> std::pair<Category, ColoredWord> {
        if (o.cat.empty()) throw UsageError("--cat is required for op '" + op + "'");
        Category cat = as_usage([&] { return Category::parse(o.cat, o.s); });
        ColoredWord word;
        if (!o.colors.empty()) word = parse_word(o.colors);
        else if (o.k >= 0) word = ColoredWord::all_white((int)o.k);
        else throw UsageError("need --k or --colors");
        out.config["cat"] = cat.name();
        if (cat.kind == Category::Kind::Ps || cat.kind == Category::Kind::NCs)
            out.config["s"] = o.s;
        out.config["k"] = word.size();
        out.config["colors"] = word.str();
        return {cat, word};
    };
    auto need = [&](const std::string& str, const char* flag) {
        if (str.empty()) throw UsageError(std::string(flag) + " is required for op '" + op + "'");
        Partition p = parse_rgs(str, flag);
        out.config[flag + 2] = str; // strip "--"
        return p;
    };

    if (op == "list") {
        auto [cat, word] = need_cat_word();
        auto all = enumerate_cat(cat, word);
        out.payload["count"] = int_json(Int(all.size()));
        json arr = json::array();
        for (const auto& p : all) arr.push_back(partition_json(p));
        out.payload["partitions"] = arr;
        out.csv_header = {"rgs", "str", "blocks"};
        for (const auto& p : all) {
            std::string rgs;
            for (size_t i = 0; i < p.rgs.size(); ++i)
                rgs += (i ? " " : "") + std::to_string(p.rgs[i]);
            out.csv_rows.push_back({rgs, p.str(), std::to_string(p.blocks())});
        }
    } else if (op == "count") {
        auto [cat, word] = need_cat_word();
        out.payload["count"] = int_json(count_cat(cat, word));
    } else if (op == "member") {
        auto [cat, word] = need_cat_word();
        Partition p = need(o.p, "--p");
        if (p.size() != word.size()) throw UsageError("--p length must match the word length");
        out.payload["member"] = in_category(p, cat, word);
    } else if (op == "join" || op == "meet" || op == "leq" || op == "mobius") {
        Partition a = need(o.a, "--a"), b = need(o.b, "--b");
        if (a.size() != b.size()) throw UsageError("--a and --b must have equal length");
        if (op == "join") out.payload["result"] = partition_json(join(a, b));
        else if (op == "meet") out.payload["result"] = partition_json(meet(a, b));
        else if (op == "leq") out.payload["leq"] = leq(a, b);
        else {
            out.config["lattice"] = o.nc ? "noncrossing" : "partition";
            out.payload["mobius"] = int_json(mobius(a, b, o.nc));
        }
    } else if (op == "fatten" || op == "shrink") {
        Partition p = need(o.p, "--p");
        out.payload["result"] = partition_json(op == "fatten" ? fatten(p) : shrink(p));
    } else if (op == "kernel") {
        if (o.idx.empty()) throw UsageError("--idx is required for op 'kernel'");
        auto idx = long_list(o.idx, "--idx");
        out.config["idx"] = o.idx;
        out.payload["result"] = partition_json(kernel(idx));
    }
    return out;
}

// ------------------------------------------------------------------- numbers

struct NumbersOpts {
    std::string name;
    long k = -1, N = -1, r = -1, b = -1;
    std::string s = "1", t = "1";
    bool enumerated = false;
    std::string format = "json";
};

Output run_numbers(const NumbersOpts& o) {
    Output out;
    out.config["command"] = "numbers";
    out.config["name"] = o.name;
    auto need_k = [&] {
        if (o.k < 0) throw UsageError("--k is required for " + o.name);
        out.config["k"] = o.k;
        return o.k;
    };
    if (o.name == "catalan") {
        out.payload["value"] = int_json(catalan(need_k()));
    } else if (o.name == "bell") {
        out.payload["value"] = int_json(bell(need_k()));
    } else if (o.name == "fuss-catalan") {
        Rat s = as_usage([&] { return rat_parse(o.s); });
        out.config["s"] = rat_str(s);
        out.payload["value"] = rat_str(fuss_catalan(s, need_k()));
    } else if (o.name == "fuss-narayana") {
        Rat s = as_usage([&] { return rat_parse(o.s); });
        Rat t = as_usage([&] { return rat_parse(o.t); });
        out.config["s"] = rat_str(s);
        out.config["t"] = rat_str(t);
        out.payload["value"] = rat_str(fuss_narayana(s, need_k(), t));
    } else if (o.name == "derangements") {
        if (o.N < 0) throw UsageError("--N is required for derangements");
        out.config["N"] = o.N;
        if (o.r >= 0) {
            out.config["r"] = o.r;
            out.payload["value"] = rat_str(derangement_profile(o.N, o.r));
        } else {
            json arr = json::array();
            out.csv_header = {"r", "probability"};
            for (long r = 0; r <= o.N; ++r) {
                Rat p = derangement_profile(o.N, r);
                arr.push_back(rat_str(p));
                out.csv_rows.push_back({std::to_string(r), rat_str(p)});
            }
            out.payload["profile"] = arr;
        }
    } else if (o.name == "stirling2") {
        if (o.b < 0) throw UsageError("--b is required for stirling2");
        out.config["b"] = o.b;
        out.payload["value"] = int_json(stirling2(need_k(), o.b));
    } else if (o.name == "poker") {
        out.config["enumerated"] = o.enumerated;
        auto table = o.enumerated ? poker_probabilities_enumerated() : poker_probabilities();
        json obj = json::object();
        out.csv_header = {"hand", "probability"};
        for (const auto& [hand, p] : table) {
            obj[hand] = rat_str(p);
            out.csv_rows.push_back({hand, rat_str(p)});
        }
        out.payload["probabilities"] = obj;
    } else if (o.name == "sphere-volume") {
        if (o.N < 0) throw UsageError("--N is required for sphere-volume");
        out.config["N"] = o.N;
        auto [c, e] = sphere_volume_ratio(o.N);
        out.payload["coefficient"] = rat_str(c);
        out.payload["exponent"] = e;
        double approx = to_double(c);
        for (long i = 0; i < e; ++i) approx *= 1.5707963267948966;
        out.payload["approx"] = approx;
    }
    return out;
}

// ----------------------------------------------------------------- cumulants

struct CumulantsOpts {
    std::string flavor, from, to;
    std::string moments, cumulants;
    long order = -1;
    bool bp = false, weighted = false;
    std::string cat, colors, t = "1";
    long k = -1, s = 1;
    std::string format = "json";
};

Flavor flavor_of(const std::string& s) {
    return s == "classical" ? Flavor::classical : Flavor::free;
}

Output run_cumulants(const CumulantsOpts& o) {
    Output out;
    out.config["command"] = "cumulants";
    if (o.weighted) {
        out.config["op"] = "weighted-moment";
        if (o.cat.empty()) throw UsageError("--weighted needs --cat");
        Category cat = as_usage([&] { return Category::parse(o.cat, o.s); });
        ColoredWord word;
        if (!o.colors.empty()) word = parse_word(o.colors);
        else if (o.k >= 0) word = ColoredWord::all_white((int)o.k);
        else throw UsageError("--weighted needs --k or --colors");
        Rat t = as_usage([&] { return rat_parse(o.t); });
        out.config["cat"] = cat.name();
        out.config["t"] = rat_str(t);
        out.config["colors"] = word.str();
        out.payload["moment"] = rat_str(partition_weighted_moment(cat, t, word));
        return out;
    }
    if (o.bp) {
        out.config["op"] = "bercovici-pata";
        if (o.moments.empty() || o.from.empty() || o.to.empty())
            throw UsageError("--bp needs --moments, --from and --to");
        out.config["from"] = o.from;
        out.config["to"] = o.to;
        MomentSequence m{rat_list(o.moments, "--moments")};
        out.config["moments"] = rats_json(m.m);
        auto r = bercovici_pata(m, flavor_of(o.from), flavor_of(o.to));
        out.payload["moments"] = rats_json(r.m);
        return out;
    }
    if (o.flavor.empty()) throw UsageError("--flavor is required");
    out.config["flavor"] = o.flavor;
    if (!o.moments.empty() && !o.cumulants.empty())
        throw UsageError("give exactly one of --moments / --cumulants");
    if (!o.moments.empty()) {
        out.config["op"] = "cumulants-from-moments";
        MomentSequence m{rat_list(o.moments, "--moments")};
        out.config["moments"] = rats_json(m.m);
        auto c = cumulants_from_moments(m, flavor_of(o.flavor));
        out.payload["cumulants"] = rats_json(c.c);
    } else if (!o.cumulants.empty()) {
        out.config["op"] = "moments-from-cumulants";
        CumulantSequence c{rat_list(o.cumulants, "--cumulants"), flavor_of(o.flavor)};
        if (o.order > (long)c.c.size()) c.c.resize((size_t)o.order, Rat(0));
        out.config["cumulants"] = rats_json(c.c);
        auto m = moments_from_cumulants(c);
        out.payload["moments"] = rats_json(m.m);
    } else {
        throw UsageError("give one of --moments / --cumulants");
    }
    return out;
}

// ------------------------------------------------------------------ convolve

struct ConvolveOpts {
    std::string op, a, b;
    std::string format = "json";
};

Output run_convolve(const ConvolveOpts& o) {
    Output out;
    out.config["command"] = "convolve";
    out.config["op"] = o.op;
    MomentSequence a{rat_list(o.a, "--a")}, b{rat_list(o.b, "--b")};
    size_t n = std::min(a.m.size(), b.m.size());
    a.m.resize(n);
    b.m.resize(n);
    out.config["a"] = rats_json(a.m);
    out.config["b"] = rats_json(b.m);
    out.config["order"] = n;
    MomentSequence r;
    if (o.op == "boxplus") r = free_additive_convolution(a, b);
    else if (o.op == "boxtimes") r = free_multiplicative_convolution(a, b);
    else r = classical_convolution(a, b);
    out.payload["moments"] = rats_json(r.m);
    return out;
}

// ----------------------------------------------------------------- transform

struct TransformOpts {
    std::string what, moments, grid;
    double eps = 1e-6;
    std::string format = "json";
};

Output run_transform(const TransformOpts& o) {
    Output out;
    out.config["command"] = "transform";
    out.config["what"] = o.what;
    MomentSequence m{rat_list(o.moments, "--moments")};
    out.config["moments"] = rats_json(m.m);
    if (o.what == "r" || o.what == "s" || o.what == "cauchy") {
        FormalSeries f = o.what == "r"   ? r_from_moments(m)
                       : o.what == "s"   ? s_from_moments(m)
                                         : cauchy_from_moments(m);
        json series = json::object();
        series["var"] = f.var == FormalSeries::Var::z ? "z" : "xi_inv";
        series["coefficients"] = rats_json(f.c);
        out.payload["series"] = series;
        out.csv_header = {"power", "coefficient"};
        for (long j = 0; j <= f.order(); ++j)
            out.csv_rows.push_back({std::to_string(j), rat_str(f.c[(size_t)j])});
    } else if (o.what == "hankel") {
        auto hr = hankel_check(m);
        out.payload["ok"] = hr.ok;
        out.payload["first_failure"] = hr.ok ? json(nullptr) : json(hr.first_failure);
    } else { // stieltjes
        if (o.grid.empty()) throw UsageError("--grid is required for stieltjes");
        auto grid = parse_grid(o.grid);
        out.config["grid"] = o.grid;
        out.config["eps"] = o.eps;
        auto G = series_cauchy_evaluator(cauchy_from_moments(m));
        auto dg = stieltjes_invert(G, grid, o.eps);
        out.payload["x"] = dg.x;
        out.payload["density"] = dg.density;
        json atoms = json::array();
        for (const auto& [loc, mass] : dg.atoms) {
            atoms.push_back(json{{"location", loc}, {"mass", mass}});
            out.csv_comments.push_back("atom location=" + dbl_str(loc) + " mass=" + dbl_str(mass));
        }
        out.payload["atoms"] = atoms;
        out.csv_header = {"x", "density"};
        for (size_t i = 0; i < dg.x.size(); ++i)
            out.csv_rows.push_back({dbl_str(dg.x[i]), dbl_str(dg.density[i])});
    }
    return out;
}

// ----------------------------------------------------------------------- law

struct LawOpts {
    std::string family;
    std::string t = "1", s = "1", c = "0", rho;
    long N = 0;
    long moments = -1;
    std::string word, grid;
    bool density = false, atoms = false;
    double tail_tol = 1e-12;
    std::string format = "json";
};

Output run_law(const LawOpts& o) {
    Output out;
    out.config["command"] = "law";
    Rat t = as_usage([&] { return rat_parse(o.t); });
    Rat s = o.s == "inf" ? Rat(kInfinity) : as_usage([&] { return rat_parse(o.s); });
    Rat c = as_usage([&] { return rat_parse(o.c); });
    DiscreteMeasure rho = o.rho.empty() ? DiscreteMeasure{} : parse_rho(o.rho);
    LawSpec law = LawSpec::parse(o.family, t, s, c, o.N, rho);
    out.config["family"] = law.name();
    using F = LawSpec::Family;
    switch (law.family) {
        case F::point_mass: out.config["c"] = rat_str(c); break;
        case F::bessel:
        case F::free_bessel: out.config["s"] = o.s == "inf" ? json("inf") : json(rat_str(s)); [[fallthrough]];
        case F::gaussian:
        case F::complex_gaussian:
        case F::poisson:
        case F::semicircle:
        case F::marchenko_pastur:
        case F::circular: out.config["t"] = rat_str(t); break;
        case F::compound_poisson:
        case F::compound_free_poisson: out.config["rho"] = o.rho; break;
        case F::free_hyperspherical: out.config["N"] = o.N; break;
    }

    if (o.moments >= 1) {
        out.config["mode"] = "moments";
        out.config["order"] = o.moments;
        if (law.family == F::complex_gaussian || law.family == F::circular)
            throw UsageError("moments of " + law.name() + " are indexed by color words; use --word");
        json arr = json::array();
        out.csv_header = {"k", "moment"};
        if (law.family == F::free_hyperspherical) {
            for (long k = 1; k <= o.moments; ++k) {
                double v = k % 2 ? 0.0 : free_hyperspherical_moment(o.N, k / 2);
                arr.push_back(v);
                out.csv_rows.push_back({std::to_string(k), dbl_str(v)});
            }
        } else {
            for (long k = 1; k <= o.moments; ++k) {
                Rat v = law_moment(law, k);
                arr.push_back(rat_str(v));
                out.csv_rows.push_back({std::to_string(k), rat_str(v)});
            }
        }
        out.payload["moments"] = arr;
    } else if (!o.word.empty()) {
        out.config["mode"] = "word-moment";
        ColoredWord word = parse_word(o.word);
        out.config["word"] = word.str();
        out.payload["moment"] = rat_str(law_moment(law, word));
    } else if (o.density) {
        if (o.grid.empty()) throw UsageError("--density needs --grid");
        out.config["mode"] = "density";
        out.config["grid"] = o.grid;
        out.config["tail_tol"] = o.tail_tol;
        auto grid = parse_grid(o.grid);
        json xs = json::array(), ds = json::array();
        bool truncated = false;
        std::vector<std::pair<double, double>> atoms;
        out.csv_header = {"x", "density"};
        for (double x : grid) {
            auto r = law_density(law, x, o.tail_tol);
            xs.push_back(x);
            ds.push_back(r.value);
            atoms = std::move(r.atoms);
            truncated = r.truncated;
            out.csv_rows.push_back({dbl_str(x), dbl_str(r.value)});
        }
        out.payload["x"] = xs;
        out.payload["density"] = ds;
        json ja = json::array();
        for (const auto& [loc, mass] : atoms) {
            ja.push_back(json{{"location", loc}, {"mass", mass}});
            out.csv_comments.push_back("atom location=" + dbl_str(loc) + " mass=" + dbl_str(mass));
        }
        out.payload["atoms"] = ja;
        out.payload["truncated"] = truncated;
    } else if (o.atoms) {
        out.config["mode"] = "atoms";
        out.config["tail_tol"] = o.tail_tol;
        bool truncated = false;
        auto atoms = law_atoms(law, o.tail_tol, &truncated);
        json ja = json::array();
        out.csv_header = {"location", "mass"};
        for (const auto& [loc, mass] : atoms) {
            ja.push_back(json{{"location", loc}, {"mass", mass}});
            out.csv_rows.push_back({dbl_str(loc), dbl_str(mass)});
        }
        out.payload["atoms"] = ja;
        out.payload["truncated"] = truncated;
    } else {
        throw UsageError("choose one of --moments / --word / --density / --atoms");
    }
    return out;
}

// ---------------------------------------------------------------- weingarten

struct WeingartenOpts {
    std::string group;
    bool free = false;
    long s = 1, N = 0, k = -1;
    std::string colors;
    bool det = false;
    std::string format = "json";
};

Output run_weingarten(const WeingartenOpts& o) {
    Output out;
    out.config["command"] = "weingarten";
    if (o.det) {
        if (o.k < 1) throw UsageError("--det needs --k");
        out.config["op"] = "gram-determinant";
        out.config["k"] = o.k;
        out.config["N"] = o.N;
        out.payload["gram_determinant"] = int_json(gram_determinant(o.k, o.N));
        return out;
    }
    EasyGroup g = as_usage([&] { return EasyGroup::parse(o.group, o.free, o.s); });
    ColoredWord word;
    if (!o.colors.empty()) word = parse_word(o.colors);
    else if (o.k >= 1) word = default_word(g, o.k);
    else throw UsageError("need --k or --colors");
    out.config["group"] = g.name();
    out.config["N"] = o.N;
    out.config["colors"] = word.str();
    auto table = weingarten(g, word, o.N);
    json basis = json::array();
    for (const auto& p : table->basis) basis.push_back(partition_json(p));
    out.payload["basis"] = basis;
    json gram = json::array(), wg = json::array();
    for (const auto& row : table->gram) gram.push_back(rats_json(row));
    for (const auto& row : table->wg) wg.push_back(rats_json(row));
    out.payload["gram"] = gram;
    out.payload["weingarten"] = wg;
    return out;
}

// ----------------------------------------------------------------- integrate

struct IntegrateOpts {
    std::string mode = "monomial";
    std::string group = "O";
    bool free = false;
    long s = 1, N = 0, k = 1;
    std::string rows, cols, colors, pattern, exponents, pi, nu;
    bool complex_field = false;
    std::string t = "1/2";
    long alpha = 0, beta = 0;
    std::string format = "json";
};

Output run_integrate(const IntegrateOpts& o) {
    Output out;
    out.config["command"] = "integrate";
    out.config["mode"] = o.mode;
    auto group = [&] { return as_usage([&] { return EasyGroup::parse(o.group, o.free, o.s); }); };
    if (o.mode == "monomial") {
        EasyGroup g = group();
        std::vector<long> rows, cols;
        ColoredWord colors;
        if (!o.pattern.empty()) {
            parse_pattern(o.pattern, rows, cols, colors);
        } else {
            if (o.rows.empty() || o.cols.empty())
                throw UsageError("monomial mode needs --pattern or --rows and --cols");
            rows = long_list(o.rows, "--rows");
            cols = long_list(o.cols, "--cols");
            if (rows.size() != cols.size()) throw UsageError("--rows and --cols must have equal length");
            colors = o.colors.empty() ? ColoredWord::all_white((int)rows.size()) : parse_word(o.colors);
            if ((size_t)colors.size() != rows.size())
                throw UsageError("--colors length must match --rows");
        }
        out.config["group"] = g.name();
        out.config["N"] = o.N;
        out.config["rows"] = rows;
        out.config["cols"] = cols;
        out.config["colors"] = colors.str();
        out.payload["value"] = rat_str(integrate_monomial(g, o.N, rows, cols, colors));
    } else if (o.mode == "sn") {
        if (o.rows.empty() || o.cols.empty()) throw UsageError("sn mode needs --rows and --cols");
        auto rows = long_list(o.rows, "--rows"), cols = long_list(o.cols, "--cols");
        if (rows.size() != cols.size()) throw UsageError("--rows and --cols must have equal length");
        out.config["N"] = o.N;
        out.config["rows"] = rows;
        out.config["cols"] = cols;
        out.payload["value"] = rat_str(integrate_sn(o.N, rows, cols));
    } else if (o.mode == "sphere") {
        if (o.exponents.empty()) throw UsageError("sphere mode needs --exponents");
        auto exps = long_list(o.exponents, "--exponents");
        out.config["N"] = o.N;
        out.config["complex"] = o.complex_field;
        out.config["exponents"] = exps;
        out.payload["value"] = rat_str(sphere_integrate(o.complex_field, o.N, exps));
    } else if (o.mode == "character") {
        EasyGroup g = group();
        Rat t = as_usage([&] { return rat_parse(o.t); });
        out.config["group"] = g.name();
        out.config["N"] = o.N;
        out.config["t"] = rat_str(t);
        out.config["k"] = o.k;
        out.payload["value"] = rat_str(truncated_character_moment(g, o.N, t, o.k));
    } else if (o.mode == "generic2") {
        out.config["N"] = o.N;
        out.config["alpha"] = o.alpha;
        out.config["beta"] = o.beta;
        out.payload["value"] = rat_str(on_two_generic_coordinates(o.N, o.alpha, o.beta));
    } else { // asymptotics
        EasyGroup g = group();
        if (o.pi.empty() || o.nu.empty()) throw UsageError("asymptotics mode needs --pi and --nu");
        Partition pi = parse_rgs(o.pi, "--pi"), nu = parse_rgs(o.nu, "--nu");
        ColoredWord word = o.colors.empty() ? ColoredWord::all_white(pi.size()) : parse_word(o.colors);
        out.config["group"] = g.name();
        out.config["pi"] = o.pi;
        out.config["nu"] = o.nu;
        out.config["colors"] = word.str();
        auto est = weingarten_asymptotics(g, pi, nu, word);
        out.payload["exponent"] = est.exponent;
        out.payload["coefficient"] = rat_str(est.coefficient);
        out.payload["coefficient_known"] = est.coefficient_known;
    }
    return out;
}

// ------------------------------------------------------------------ simulate

struct SimulateOpts {
    std::string ensemble;
    long N = 0, M = 0, d = 0, n = 0, m = 0;
    double t = 1.0;
    std::string map = "identity";
    long max_dim = 1000;
    std::uint64_t seed = 1;
    long trials = 1;
    std::string seeds;
    long moments = -1;
    std::string word;
    bool histogram = false;
    double bins = 0.1;
    double scale = 0;
    bool scale_set = false;
    std::string format = "json";
};

Output run_simulate(const SimulateOpts& o) {
    Output out;
    out.config["command"] = "simulate";
    EnsembleSpec spec;
    using K = EnsembleSpec::Kind;
    spec.kind = o.ensemble == "Wigner"          ? K::wigner
              : o.ensemble == "ComplexGaussian" ? K::complex_gaussian
              : o.ensemble == "Wishart"         ? K::wishart
                                                : K::block_wishart;
    spec.N = o.N;
    spec.M = o.M;
    spec.t = o.t;
    spec.d = o.d;
    spec.n = o.n;
    spec.m = o.m;
    spec.map = as_usage([&] { return block_map_parse(o.map); });
    spec.max_dim = o.max_dim;
    spec.validate();
    out.config["ensemble"] = spec.name();
    if (spec.kind == K::wigner || spec.kind == K::complex_gaussian) {
        out.config["N"] = o.N;
        out.config["t"] = o.t;
    } else if (spec.kind == K::wishart) {
        out.config["N"] = o.N;
        out.config["M"] = o.M;
    } else {
        out.config["d"] = o.d;
        out.config["n"] = o.n;
        out.config["m"] = o.m;
        out.config["map"] = o.map;
    }
    std::vector<std::uint64_t> seeds;
    if (!o.seeds.empty()) {
        seeds = seed_list(o.seeds);
        out.config["seeds"] = seeds;
    } else {
        if (o.trials < 1) throw UsageError("--trials must be >= 1");
        seeds = expand_seeds(o.seed, o.trials);
        out.config["seed"] = o.seed;
        out.config["trials"] = o.trials;
    }
    std::optional<double> scale;
    if (o.scale_set) {
        scale = o.scale;
        out.config["scale"] = o.scale;
    } else {
        out.config["scale"] = "default";
    }

    if (o.moments >= 1) {
        out.config["mode"] = "moments";
        auto stats = empirical_moments(spec, seeds, o.moments, scale);
        json arr = json::array();
        out.csv_header = {"order", "mean", "stderr", "trials"};
        for (size_t p = 0; p < stats.size(); ++p) {
            arr.push_back(json{{"order", p + 1},
                               {"mean", stats[p].mean},
                               {"stderr", stats[p].stderr_},
                               {"trials", stats[p].trials}});
            out.csv_rows.push_back({std::to_string(p + 1), dbl_str(stats[p].mean),
                                    dbl_str(stats[p].stderr_), std::to_string(stats[p].trials)});
        }
        out.payload["moments"] = arr;
    } else if (!o.word.empty()) {
        out.config["mode"] = "word-moment";
        ColoredWord word = parse_word(o.word);
        out.config["word"] = word.str();
        auto st = empirical_colored_moment(spec, seeds, word, scale);
        out.payload["mean"] = st.mean;
        out.payload["stderr"] = st.stderr_;
        out.payload["trials"] = st.trials;
    } else if (o.histogram) {
        out.config["mode"] = "histogram";
        out.config["bin_width"] = o.bins;
        auto dg = empirical_spectrum(spec, seeds, o.bins, scale);
        out.payload["x"] = dg.x;
        out.payload["density"] = dg.density;
        out.csv_header = {"x", "density"};
        for (size_t i = 0; i < dg.x.size(); ++i)
            out.csv_rows.push_back({dbl_str(dg.x[i]), dbl_str(dg.density[i])});
    } else {
        throw UsageError("choose one of --moments / --word / --histogram");
    }
    return out;
}

// --------------------------------------------------------------------- graph

struct GraphOpts {
    std::string name, file, coeffs;
    long depth = 0, loops = -1, order = 10;
    bool poincare_flag = false, theta_flag = false, circular = false;
    std::string method = "formula";
    std::string format = "json";
};

RootedBipartiteGraph graph_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open graph file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw UsageError("graph file: " + std::string(e.what()));
    }
    return as_usage([&] {
        RootedBipartiteGraph g;
        if (j.contains("parts")) {
            // {parts: [[a labels], [b labels]], edges: a x b multiplicity matrix,
            // root: index or label in the a-part}
            if (j.at("parts").size() != 2) throw UsageError("graph file: parts must hold two lists");
            const auto& apart = j.at("parts").at(0);
            for (const auto& row : j.at("edges")) {
                std::vector<Int> r;
                for (const auto& v : row) r.push_back(Int(v.get<std::int64_t>()));
                g.E.push_back(std::move(r));
            }
            if ((size_t)g.na() != apart.size())
                throw UsageError("graph file: edges must have one row per a-part vertex");
            const auto& root = j.at("root");
            if (root.is_number_integer()) {
                g.root = root.get<long>();
            } else {
                g.root = -1;
                for (size_t i = 0; i < apart.size(); ++i)
                    if (apart.at(i) == root) g.root = (long)i;
                if (g.root < 0) throw UsageError("graph file: root label not in the a-part");
            }
            g.name = j.value("name", std::string{});
            g.truncation_depth = j.value("truncation_depth", 0);
            g.validate();
            return g;
        }
        long n = j.at("vertices").get<long>();
        std::vector<std::array<long, 3>> edges;
        for (const auto& e : j.at("edges")) {
            if (e.size() < 2 || e.size() > 3) throw UsageError("graph file: edges are [u,v] or [u,v,mult]");
            edges.push_back({e[0].get<long>(), e[1].get<long>(),
                             e.size() == 3 ? e[2].get<long>() : 1});
        }
        return from_adjacency(n, edges, j.value("root", 0), j.value("name", std::string{}),
                              j.value("truncation_depth", 0));
    });
}

Output run_graph(const GraphOpts& o) {
    Output out;
    out.config["command"] = "graph";
    long modes = (o.loops >= 0) + o.poincare_flag + o.theta_flag + o.circular;
    if (modes != 1) throw UsageError("choose exactly one of --loops / --poincare / --theta / --circular");

    if (!o.coeffs.empty()) {
        if (!o.theta_flag) throw UsageError("--coeffs only applies to --theta");
        auto cl = long_list(o.coeffs, "--coeffs");
        std::vector<Int> c(cl.begin(), cl.end());
        long order = std::min<long>(o.order, (long)c.size() - 1);
        out.config["mode"] = "theta";
        out.config["coeffs"] = cl;
        out.config["order"] = order;
        out.config["method"] = o.method;
        auto a = o.method == "direct" ? theta_direct(c, order) : theta_from_poincare(c, order);
        out.payload["theta"] = ints_json(a);
        out.csv_header = {"n", "value"};
        for (size_t i = 0; i < a.size(); ++i)
            out.csv_rows.push_back({std::to_string(i), a[i].str()});
        return out;
    }

    RootedBipartiteGraph g;
    if (!o.name.empty()) g = as_usage([&] { return ade_graph(o.name, o.depth); });
    else if (!o.file.empty()) g = graph_from_file(o.file);
    else throw UsageError("need --name, --file or --coeffs");
    out.config["graph"] = g.name.empty() ? "(file)" : g.name;
    out.config["na"] = g.na();
    out.config["nb"] = g.nb();
    out.config["root"] = g.root;
    if (g.truncation_depth > 0) out.config["truncation_depth"] = g.truncation_depth;

    auto tabulate = [&](const char* key, const json& arr, const std::vector<std::string>& vals) {
        out.payload[key] = arr;
        out.csv_header = {"n", "value"};
        for (size_t i = 0; i < vals.size(); ++i)
            out.csv_rows.push_back({std::to_string(i), vals[i]});
    };
    if (o.loops >= 0) {
        out.config["mode"] = "loops";
        out.config["n"] = o.loops;
        out.payload["loops"] = int_json(loop_count(g, o.loops));
    } else if (o.poincare_flag) {
        out.config["mode"] = "poincare";
        out.config["order"] = o.order;
        auto c = poincare(g, o.order);
        std::vector<std::string> vals;
        for (const auto& v : c) vals.push_back(v.str());
        tabulate("poincare", ints_json(c), vals);
    } else if (o.theta_flag) {
        out.config["mode"] = "theta";
        out.config["order"] = o.order;
        out.config["method"] = o.method;
        auto c = poincare(g, o.order);
        auto a = o.method == "direct" ? theta_direct(c, o.order) : theta_from_poincare(c, o.order);
        std::vector<std::string> vals;
        for (const auto& v : a) vals.push_back(v.str());
        tabulate("theta", ints_json(a), vals);
    } else {
        out.config["mode"] = "circular";
        out.config["order"] = o.order;
        auto eps = circular_even_moments(g, o.order);
        std::vector<std::string> vals;
        for (const auto& v : eps) vals.push_back(rat_str(v));
        tabulate("circular_even_moments", rats_json(eps), vals);
    }
    return out;
}

// -------------------------------------------------------------------- verify

struct VerifyOpts {
    std::string suite = "all";
    std::uint64_t seed = 1;
    std::string format = "text";
};

int run_verify(const VerifyOpts& o) {
    auto results = acceptance::run(o.suite, o.seed);
    long unexpected = 0;
    for (const auto& r : results)
        if (!r.pass && !r.known_fail) ++unexpected;
    if (o.format == "json") {
        json j = json::object();
        j["config"] = json{{"command", "verify"}, {"suite", o.suite}, {"seed", o.seed}};
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back(json{{"id", r.id},
                               {"name", r.name},
                               {"suite", r.suite},
                               {"pass", r.pass},
                               {"known_fail", r.known_fail},
                               {"seconds", r.seconds},
                               {"detail", r.detail}});
        j["results"] = arr;
        j["unexpected_failures"] = unexpected;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            const char* status = r.pass ? "PASS" : r.known_fail ? "FAIL (expected)" : "FAIL";
            std::printf("%-15s %2d %-28s %6.2fs", status, r.id, r.name.c_str(), r.seconds);
            if (!r.detail.empty()) std::printf("  -- %s", r.detail.c_str());
            std::printf("\n");
        }
        std::printf("unexpected failures: %ld\n", unexpected);
    }
    return unexpected > 0 ? 1 : 0;
}

void add_format(CLI::App* sub, std::string& fmt) {
    sub->add_option("--format", fmt, "output format")->check(CLI::IsMember({"json", "csv"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"freeprob: partitions, cumulants, Weingarten calculus and friends"};
    app.require_subcommand(1);

    PartitionsOpts po;
    auto* sp = app.add_subcommand("partitions", "enumerate and manipulate categories of partitions");
    sp->add_option("--op", po.op, "operation")
        ->check(CLI::IsMember({"list", "count", "member", "join", "meet", "leq", "mobius",
                               "fatten", "shrink", "kernel"}));
    sp->add_flag("--count", po.count_flag, "shorthand for --op count");
    sp->add_option("--cat", po.cat, "category name (P, P2, Peven, Ps, P12, NC, NC2, NCeven, NCs, NC12, MatchP2, MatchNC2, MatchPeven, MatchNCeven)");
    sp->add_option("--s", po.s, "parameter of Ps/NCs");
    sp->add_option("--k", po.k, "number of points (all-white word)");
    sp->add_option("--colors", po.colors, "color word, letters o/b");
    sp->add_option("--a", po.a, "first partition as comma-separated RGS labels");
    sp->add_option("--b", po.b, "second partition as RGS labels");
    sp->add_option("--p", po.p, "partition argument as RGS labels");
    sp->add_option("--idx", po.idx, "index tuple for op kernel");
    sp->add_flag("--nc", po.nc, "use the noncrossing lattice for mobius");
    add_format(sp, po.format);

    NumbersOpts no;
    auto* sn = app.add_subcommand("numbers", "exact combinatorial numbers");
    sn->add_option("name", no.name, "which family")
        ->required()
        ->check(CLI::IsMember({"catalan", "bell", "fuss-catalan", "fuss-narayana",
                               "derangements", "stirling2", "poker", "sphere-volume"}));
    sn->add_option("--k", no.k, "index");
    sn->add_option("--N", no.N, "size parameter");
    sn->add_option("--r", no.r, "fixed-point count (derangements)");
    sn->add_option("--b", no.b, "block count (stirling2)");
    sn->add_option("--s", no.s, "rational s (fuss-catalan, fuss-narayana)");
    sn->add_option("--t", no.t, "rational t (fuss-narayana)");
    sn->add_flag("--enumerated", no.enumerated, "poker: full-scan oracle instead of the published table");
    add_format(sn, no.format);

    CumulantsOpts co;
    auto* sc = app.add_subcommand("cumulants", "moment-cumulant transforms");
    sc->add_option("--flavor", co.flavor, "classical or free")
        ->check(CLI::IsMember({"classical", "free"}));
    sc->add_option("--moments", co.moments, "comma-separated rational moments M_1,M_2,...");
    sc->add_option("--cumulants", co.cumulants, "comma-separated rational cumulants");
    sc->add_option("--order", co.order, "zero-pad cumulant input up to this order");
    sc->add_flag("--bp", co.bp, "Bercovici-Pata: reinterpret cumulants across flavors");
    sc->add_option("--from", co.from, "bp source flavor")->check(CLI::IsMember({"classical", "free"}));
    sc->add_option("--to", co.to, "bp target flavor")->check(CLI::IsMember({"classical", "free"}));
    sc->add_flag("--weighted", co.weighted, "partition-weighted moment over a category");
    sc->add_option("--cat", co.cat, "category for --weighted");
    sc->add_option("--s", co.s, "parameter of Ps/NCs");
    sc->add_option("--t", co.t, "rational weight t");
    sc->add_option("--k", co.k, "all-white word length for --weighted");
    sc->add_option("--colors", co.colors, "color word for --weighted");
    add_format(sc, co.format);

    ConvolveOpts vo;
    auto* sv = app.add_subcommand("convolve", "convolve two moment sequences");
    sv->add_option("--op", vo.op, "boxplus (free additive), boxtimes (free multiplicative) or classical")
        ->required()
        ->check(CLI::IsMember({"boxplus", "boxtimes", "classical"}));
    sv->add_option("--a", vo.a, "moments of the first law")->required();
    sv->add_option("--b", vo.b, "moments of the second law")->required();
    add_format(sv, vo.format);

    TransformOpts to;
    auto* st = app.add_subcommand("transform", "R/S/Cauchy transforms, Hankel test, Stieltjes inversion");
    st->add_option("--what", to.what, "which transform")
        ->required()
        ->check(CLI::IsMember({"r", "s", "cauchy", "hankel", "stieltjes"}));
    st->add_option("--moments", to.moments, "comma-separated rational moments")->required();
    st->add_option("--grid", to.grid, "a:b:step evaluation grid (stieltjes)");
    st->add_option("--eps", to.eps, "imaginary offset (stieltjes)");
    add_format(st, to.format);

    LawOpts lo;
    auto* sl = app.add_subcommand("law", "moments, densities and atoms of the named laws");
    sl->add_option("--family", lo.family, "law family")
        ->required()
        ->check(CLI::IsMember({"PointMass", "Gaussian", "ComplexGaussian", "Poisson", "Bessel",
                               "Semicircle", "MarchenkoPastur", "Circular", "FreeBessel",
                               "CompoundPoisson", "CompoundFreePoisson", "FreeHyperspherical"}));
    sl->add_option("--t", lo.t, "rational parameter t");
    sl->add_option("--s", lo.s, "rational parameter s (Bessel/FreeBessel; 'inf' allowed for Bessel)");
    sl->add_option("--c", lo.c, "location (PointMass)");
    sl->add_option("--N", lo.N, "dimension (FreeHyperspherical)");
    sl->add_option("--rho", lo.rho, "base measure loc:mass,loc:mass (compound families)");
    sl->add_option("--moments", lo.moments, "print moments M_1..M_k");
    sl->add_option("--word", lo.word, "colored *-moment, letters o/b");
    sl->add_flag("--density", lo.density, "evaluate the density on --grid");
    sl->add_option("--grid", lo.grid, "a:b:step grid for --density");
    sl->add_flag("--atoms", lo.atoms, "list the atomic part");
    sl->add_option("--tail-tol", lo.tail_tol, "atomic tail cutoff");
    add_format(sl, lo.format);

    WeingartenOpts wo;
    auto* sw = app.add_subcommand("weingarten", "exact Gram and Weingarten matrices");
    sw->add_option("--group", wo.group, "easy group series")
        ->check(CLI::IsMember({"S", "O", "U", "B", "H", "K", "Hs"}));
    sw->add_flag("--free", wo.free, "use the free (+) version");
    sw->add_option("--s", wo.s, "parameter of the Hs series");
    sw->add_option("--N", wo.N, "matrix dimension")->required();
    sw->add_option("--k", wo.k, "conventional word length parameter");
    sw->add_option("--colors", wo.colors, "explicit color word");
    sw->add_flag("--det", wo.det, "print det of the full P(k) Gram matrix instead");
    add_format(sw, wo.format);

    IntegrateOpts io;
    auto* si = app.add_subcommand("integrate", "Haar, sphere and character integrals");
    si->add_option("--mode", io.mode, "what to integrate")
        ->check(CLI::IsMember({"monomial", "sn", "sphere", "character", "generic2", "asymptotics"}));
    si->add_option("--group", io.group, "easy group series")
        ->check(CLI::IsMember({"S", "O", "U", "B", "H", "K", "Hs"}));
    si->add_flag("--free", io.free, "use the free (+) version");
    si->add_option("--s", io.s, "parameter of the Hs series");
    si->add_option("--N", io.N, "dimension")->required();
    si->add_option("--rows", io.rows, "1-based row indices");
    si->add_option("--cols", io.cols, "1-based column indices");
    si->add_option("--colors", io.colors, "conjugation pattern, letters o/b");
    si->add_option("--pattern", io.pattern, "index pattern like \"u[1,1]u[1,2]*\", * marking conjugates");
    si->add_option("--exponents", io.exponents, "sphere exponents e_1,e_2,...");
    si->add_flag("--complex", io.complex_field, "complex sphere (exponents read as |z_a|^(2 e_a))");
    si->add_option("--t", io.t, "truncation ratio (character mode)");
    si->add_option("--k", io.k, "moment order (character mode)");
    si->add_option("--alpha", io.alpha, "exponent of the first coordinate (generic2)");
    si->add_option("--beta", io.beta, "exponent of the second coordinate (generic2)");
    si->add_option("--pi", io.pi, "partition pi as RGS labels (asymptotics)");
    si->add_option("--nu", io.nu, "partition nu as RGS labels (asymptotics)");
    add_format(si, io.format);

    SimulateOpts mo;
    auto* sm = app.add_subcommand("simulate", "seed-reproducible random matrix sampling");
    sm->add_option("--ensemble", mo.ensemble, "ensemble kind")
        ->required()
        ->check(CLI::IsMember({"Wigner", "ComplexGaussian", "Wishart", "BlockWishart"}));
    sm->add_option("--N", mo.N, "dimension (Wigner/ComplexGaussian/Wishart rows)");
    sm->add_option("--M", mo.M, "Wishart columns");
    sm->add_option("--t", mo.t, "entry variance");
    sm->add_option("--d", mo.d, "BlockWishart block dimension");
    sm->add_option("--n", mo.n, "BlockWishart row blocks");
    sm->add_option("--m", mo.m, "BlockWishart column blocks");
    sm->add_option("--map", mo.map, "block map")
        ->check(CLI::IsMember({"identity", "transpose", "trace_one", "diagonal"}));
    sm->add_option("--max-dim", mo.max_dim, "safety cap on the sampled dimension");
    sm->add_option("--seed", mo.seed, "master seed");
    sm->add_option("--trials", mo.trials, "number of independent trials");
    sm->add_option("--seeds", mo.seeds, "explicit comma-separated trial seeds (overrides --seed/--trials)");
    sm->add_option("--moments", mo.moments, "empirical normalized trace moments up to this order");
    sm->add_option("--word", mo.word, "colored word moment, letters o/b");
    sm->add_flag("--histogram", mo.histogram, "pooled eigenvalue histogram");
    sm->add_option("--bins", mo.bins, "histogram bin width");
    sm->add_option("--scale", mo.scale, "override the canonical rescale factor")
        ->each([&mo](const std::string&) { mo.scale_set = true; });
    add_format(sm, mo.format);

    GraphOpts go;
    auto* sg = app.add_subcommand("graph", "rooted bipartite graphs, Poincare and theta series");
    sg->add_option("--name", go.name, "ADE family name (A5, D4, A~4, E~8, A_inf, ...)");
    sg->add_option("--file", go.file, "graph description as JSON");
    sg->add_option("--coeffs", go.coeffs, "raw Poincare coefficients for --theta");
    sg->add_option("--depth", go.depth, "truncation depth for A_inf/D_inf");
    sg->add_option("--loops", go.loops, "count 2n-loops at the root");
    sg->add_flag("--poincare", go.poincare_flag, "Poincare coefficients");
    sg->add_flag("--theta", go.theta_flag, "theta coefficients");
    sg->add_flag("--circular", go.circular, "even moments of the circular measure");
    sg->add_option("--order", go.order, "highest order");
    sg->add_option("--method", go.method, "theta evaluation method")
        ->check(CLI::IsMember({"formula", "direct"}));
    add_format(sg, go.format);

    VerifyOpts yo;
    auto* sy = app.add_subcommand("verify", "run the built-in acceptance suite");
    sy->add_option("--suite", yo.suite, "which suite")
        ->check(CLI::IsMember({"all", "exact", "montecarlo"}));
    sy->add_option("--seed", yo.seed, "master seed for the Monte Carlo criteria");
    sy->add_option("--format", yo.format, "output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sy->parsed()) return run_verify(yo);
        Output out;
        std::string format = "json";
        if (sp->parsed()) { out = run_partitions(po); format = po.format; }
        else if (sn->parsed()) { out = run_numbers(no); format = no.format; }
        else if (sc->parsed()) { out = run_cumulants(co); format = co.format; }
        else if (sv->parsed()) { out = run_convolve(vo); format = vo.format; }
        else if (st->parsed()) { out = run_transform(to); format = to.format; }
        else if (sl->parsed()) { out = run_law(lo); format = lo.format; }
        else if (sw->parsed()) { out = run_weingarten(wo); format = wo.format; }
        else if (si->parsed()) { out = run_integrate(io); format = io.format; }
        else if (sm->parsed()) { out = run_simulate(mo); format = mo.format; }
        else if (sg->parsed()) { out = run_graph(go); format = go.format; }
        emit(out, format);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
