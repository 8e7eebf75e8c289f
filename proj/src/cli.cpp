#include "mckay/cli.hpp"

#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mckay/catalog.hpp"
#include "mckay/coxeter.hpp"
#include "mckay/errors.hpp"
#include "mckay/kostant.hpp"
#include "mckay/numbers.hpp"
#include "mckay/quiver.hpp"
#include "mckay/verify.hpp"

namespace mckay {
namespace {

using ordered_json = nlohmann::ordered_json;

// ---------- rendering helpers ----------

std::string int_list(const std::vector<BigInt>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

std::string int_list(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string mat_list(const ZMat& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += ", ";
        s += int_list(m[i]);
    }
    return s + "]";
}

// The zero polynomial renders as [0] so a numerator is never an empty list.
std::string poly_list(const IntPoly& p) {
    if (p.is_zero()) return "[0]";
    return int_list(p.c);
}

ordered_json json_ints(const std::vector<BigInt>& v) {
    ordered_json a = ordered_json::array();
    for (const BigInt& x : v) a.push_back(to_i64(x, "JSON payload"));
    return a;
}

ordered_json json_ints(const std::vector<int>& v) {
    ordered_json a = ordered_json::array();
    for (int x : v) a.push_back(x);
    return a;
}

ordered_json json_mat(const ZMat& m) {
    ordered_json a = ordered_json::array();
    for (const ZVec& row : m) a.push_back(json_ints(row));
    return a;
}

ordered_json json_poly(const IntPoly& p) {
    if (p.is_zero()) {
        ordered_json a = ordered_json::array();
        a.push_back(0);
        return a;
    }
    return json_ints(p.c);
}

// CSV fields are quoted only when they need it; quotes double per the usual
// convention.
std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string csv_coords(const ZVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s;
}

// ---------- shared per-input construction ----------

struct Built {
    InputSpec spec;
    QuiverMode mode;
    McKayQuiver q;
    CoxeterData cd;
};

Built make_built(const std::string& input, const std::string& mode_str) {
    InputSpec spec = parse_input(input);
    QuiverMode mode = mode_str.empty() ? default_mode(spec) : parse_mode(mode_str);
    PreparedInput prep(spec);
    McKayQuiver q = build_quiver(prep, mode);
    CoxeterData cd = build_coxeter(q);
    return Built{std::move(spec), mode, std::move(q), std::move(cd)};
}

// Default truncation depth: three Coxeter periods, or a fixed window when no
// Coxeter number exists.
int depth_for(int k_flag, const CoxeterData& cd) {
    if (k_flag >= 0) return k_flag;
    return cd.bipartite ? static_cast<int>(3 * cd.h) : 30;
}

// Node series for an input: the z-increment form when the orbit machinery
// applies, else the Molien oracle. Returned in canonical node order.
std::vector<RationalSeries> node_series(const Built& b) {
    std::vector<RationalSeries> s =
        b.cd.orbit_ok ? genfunc_series(b.q, b.cd) : molien_series(b.q);
    std::vector<RationalSeries> canon(s.size());
    for (int i = 0; i < b.q.size(); ++i) canon[b.q.type.to_canonical[i]] = std::move(s[i]);
    return canon;
}

// A series ready for printing: either num over the factored exponent
// denominator (1-t^a)(1-t^b), or a reduced num/den coefficient pair.
struct SeriesView {
    IntPoly num;
    IntPoly den;
    bool factored = false;
    long a = 0, b = 0;
};

SeriesView present_series(const RationalSeries& s, const CoxeterData& cd) {
    if (cd.bipartite && cd.h % 2 == 0) {
        IntPoly d = exponents_denominator(cd);
        if (poly_divides(s.den, s.num * d))
            return SeriesView{poly_divexact(s.num * d, s.den), d, true, cd.exp_a, cd.exp_b};
    }
    RationalSeries r = s.reduced();
    return SeriesView{std::move(r.num), std::move(r.den), false, 0, 0};
}

std::string den_string(const SeriesView& v) {
    if (v.factored)
        return "(1-t^" + std::to_string(v.a) + ")(1-t^" + std::to_string(v.b) + ")";
    return poly_list(v.den);
}

std::string series_row(const SeriesView& v) {
    return "num=" + poly_list(v.num) + ", den=" + den_string(v);
}

// ---------- list ----------

int cmd_list(const std::string& format, std::ostream& out) {
    const auto& cat = catalog_instances();
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& inst : cat) {
            ordered_json j;
            j["input"] = inst.input;
            if (inst.is_pair()) {
                j["restricted"] = inst.restricted_type;
                j["induced"] = inst.induced_type;
            } else {
                j["type"] = inst.irreducible_type;
            }
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        out << "input,mode,type\n";
        for (const auto& inst : cat) {
            if (inst.is_pair()) {
                out << csv_quote(inst.input) << ",restricted," << inst.restricted_type << "\n";
                out << csv_quote(inst.input) << ",induced," << inst.induced_type << "\n";
            } else {
                out << inst.input << ",irreducible," << inst.irreducible_type << "\n";
            }
        }
        return 0;
    }
    for (const auto& inst : cat) {
        if (inst.is_pair())
            out << inst.input << " : restricted=" << inst.restricted_type
                << ", induced=" << inst.induced_type << "\n";
        else
            out << inst.input << " : A-D-E type " << inst.irreducible_type << "\n";
    }
    return 0;
}

// ---------- quiver ----------

int cmd_quiver(const Built& b, const std::string& format, std::ostream& out) {
    const McKayQuiver& q = b.q;
    ZVec alpha0(q.size(), 0);
    alpha0[0] = 1;
    if (format == "json") {
        ordered_json j;
        j["input"] = q.input_name;
        j["mode"] = mode_name(b.mode);
        j["type"] = q.type.name;
        ordered_json nodes = ordered_json::array();
        for (int i = 0; i < q.size(); ++i) {
            ordered_json n;
            n["dim"] = to_i64(q.node_dims[i], "node dimension");
            n["mode"] = mode_name(b.mode);
            nodes.push_back(std::move(n));
        }
        j["nodes"] = std::move(nodes);
        j["adjacency"] = json_mat(q.adjacency);
        j["cartan"] = json_mat(q.cartan);
        j["labels"] = json_ints(q.labels);
        j["marks"] = json_ints(q.marks);
        j["alpha0"] = json_ints(alpha0);
        j["canonical_order"] = json_ints(q.type.to_canonical);
        out << j.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        out << "node,dim,label,mark\n";
        for (int i = 0; i < q.size(); ++i)
            out << i << "," << q.node_dims[i].str() << "," << q.labels[i].str() << ","
                << q.marks[i].str() << "\n";
        return 0;
    }
    out << "input: " << q.input_name << "\n";
    out << "mode: " << mode_name(b.mode) << "\n";
    out << "type: " << q.type.name << "\n";
    out << "nodes: " << q.size() << "\n";
    out << "dimensions: " << int_list(q.node_dims) << "\n";
    out << "labels: " << int_list(q.labels) << "\n";
    out << "marks: " << int_list(q.marks) << "\n";
    out << "adjacency: " << mat_list(q.adjacency) << "\n";
    out << "cartan: " << mat_list(q.cartan) << "\n";
    out << "alpha0: " << int_list(alpha0) << "\n";
    out << "canonical order: " << int_list(q.type.to_canonical) << "\n";
    return 0;
}

// ---------- kostant ----------

int cmd_kostant(const Built& b, int k_flag, const std::string& format, std::ostream& out) {
    const McKayQuiver& q = b.q;
    const CoxeterData& cd = b.cd;
    int K = depth_for(k_flag, cd);
    std::vector<ZVec> xk = xk_recursive(q, K);
    for (ZVec& v : xk) v = q.to_canonical(v);

    if (format == "csv") {
        for (int k = 0; k <= K; ++k) out << k << "," << csv_coords(xk[k]) << "\n";
        return 0;
    }

    std::vector<RationalSeries> series = node_series(b);
    bool have_exp = cd.bipartite && cd.h % 2 == 0;

    if (format == "json") {
        ordered_json j;
        j["pair"] = q.input_name;
        j["mode"] = mode_name(b.mode);
        if (have_exp) {
            j["a"] = cd.exp_a;
            j["b"] = cd.exp_b;
        } else {
            j["a"] = nullptr;
            j["b"] = nullptr;
        }
        if (cd.bipartite)
            j["h"] = cd.h;
        else
            j["h"] = nullptr;
        ordered_json zarr = ordered_json::array();
        if (cd.orbit_ok)
            for (const ZVec& zk : cd.z) zarr.push_back(json_ints(q.to_canonical(zk)));
        j["z"] = std::move(zarr);
        ordered_json ser;
        for (size_t i = 0; i < series.size(); ++i) {
            SeriesView v = present_series(series[i], cd);
            ordered_json e;
            e["num"] = json_poly(v.num);
            e["den"] = json_poly(v.den);
            ser["node_" + std::to_string(i)] = std::move(e);
        }
        j["series"] = std::move(ser);
        ordered_json xs = ordered_json::array();
        for (const ZVec& v : xk) xs.push_back(json_ints(v));
        j["xk"] = std::move(xs);
        j["canonical_order"] = json_ints(q.type.to_canonical);
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "input: " << q.input_name << "\n";
    out << "mode: " << mode_name(b.mode) << "\n";
    out << "type: " << q.type.name << "\n";
    if (cd.bipartite) {
        out << "h: " << cd.h << "\n";
        if (have_exp) out << "exponents: a=" << cd.exp_a << ", b=" << cd.exp_b << "\n";
    } else {
        out << "root data: unavailable (" << cd.skip_reason << ")\n";
    }
    out << "nodes in canonical order\n";
    for (int k = 0; k <= K; ++k) out << "x_" << k << " = " << int_list(xk[k]) << "\n";
    for (size_t i = 0; i < series.size(); ++i)
        out << "node " << i << " series: " << series_row(present_series(series[i], cd)) << "\n";
    return 0;
}

// ---------- poincare ----------

int cmd_poincare(const Built& b, int k_flag, int node_flag, const std::string& format,
                 std::ostream& out) {
    const McKayQuiver& q = b.q;
    const CoxeterData& cd = b.cd;
    if (node_flag >= q.size())
        throw input_error("node " + std::to_string(node_flag) + " is out of range; " +
                          q.input_name + " has nodes 0.." + std::to_string(q.size() - 1));
    std::vector<RationalSeries> series = node_series(b);
    int first = node_flag >= 0 ? node_flag : 0;
    int last = node_flag >= 0 ? node_flag : q.size() - 1;

    if (format == "csv") {
        int K = depth_for(k_flag, cd);
        std::vector<std::vector<BigInt>> cols;
        for (int i = first; i <= last; ++i) cols.push_back(series[i].expand_int(K));
        for (int k = 0; k <= K; ++k) {
            out << k;
            for (const auto& col : cols) out << "," << col[k].str();
            out << "\n";
        }
        return 0;
    }

    if (format == "json") {
        ordered_json j;
        j["pair"] = q.input_name;
        j["mode"] = mode_name(b.mode);
        j["type"] = q.type.name;
        ordered_json ser;
        for (int i = first; i <= last; ++i) {
            SeriesView v = present_series(series[i], cd);
            ordered_json e;
            e["num"] = json_poly(v.num);
            e["den"] = json_poly(v.den);
            if (v.factored)
                e["den_factored"] = den_string(v);
            else
                e["den_factored"] = nullptr;
            ser["node_" + std::to_string(i)] = std::move(e);
        }
        j["series"] = std::move(ser);
        j["canonical_order"] = json_ints(q.type.to_canonical);
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "input: " << q.input_name << "\n";
    out << "mode: " << mode_name(b.mode) << "\n";
    out << "type: " << q.type.name << "\n";
    for (int i = first; i <= last; ++i)
        out << "node " << i << ": " << series_row(present_series(series[i], cd)) << "\n";
    return 0;
}

// ---------- verify ----------

int cmd_verify(const std::string& input, const std::string& mode_str, const std::string& level,
               const std::string& format, std::ostream& out) {
    if (!mode_str.empty() && input.empty())
        throw input_error("--mode on verify needs --input to name the pair");
    VerifyOptions vo;
    vo.full = level == "full";
    vo.only_input = input;
    if (!mode_str.empty()) {
        vo.has_mode = true;
        vo.only_mode = parse_mode(mode_str);
    }
    std::vector<CheckResult> rows = run_verify(vo);
    size_t fails = 0;
    for (const auto& r : rows)
        if (r.status == "FAIL") ++fails;

    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["name"] = r.name;
            j["status"] = r.status;
            j["detail"] = r.detail;
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << "\n";
    } else if (format == "csv") {
        out << "name,status,detail\n";
        for (const auto& r : rows)
            out << csv_quote(r.name) << "," << r.status << "," << csv_quote(r.detail) << "\n";
    } else {
        for (const auto& r : rows) out << format_check(r) << "\n";
        if (fails == 0)
            out << "result: PASS (" << rows.size() << " checks)\n";
        else
            out << "result: FAIL (" << fails << " of " << rows.size() << " checks)\n";
    }
    return fails == 0 ? 0 : 3;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"McKay quivers, Kostant multiplicity vectors and Poincare series "
                 "for finite subgroups of SL2(C)"};
    app.require_subcommand(1);

    std::string input, mode, format = "plain", level = "fast";
    int k = -1, node = -1;

    auto* c_list = app.add_subcommand("list", "List the cataloged inputs and their affine types");
    auto* c_quiver = app.add_subcommand("quiver", "Quiver, Cartan matrix and node data");
    auto* c_kostant = app.add_subcommand("kostant", "Symmetric-power multiplicity vectors x_k");
    auto* c_poincare = app.add_subcommand("poincare", "Per-node Poincare series");
    auto* c_verify = app.add_subcommand("verify", "Run the identity suite");

    for (auto* c : {c_quiver, c_kostant, c_poincare})
        c->add_option("--input", input, "group or pair, e.g. C4 or T<O")->required();
    c_verify->add_option("--input", input, "restrict the suite to one cataloged input");
    for (auto* c : {c_quiver, c_kostant, c_poincare, c_verify})
        c->add_option("--mode", mode, "irreducible | restricted | induced");
    for (auto* c : {c_kostant, c_poincare})
        c->add_option("--k", k, "truncation depth (default 3h)")->check(CLI::Range(0, 10000));
    c_poincare->add_option("--node", node, "print a single node")->check(CLI::Range(0, 1000));
    for (auto* c : {c_list, c_quiver, c_kostant, c_poincare, c_verify})
        c->add_option("--format", format, "plain | json | csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
    c_verify->add_option("--level", level, "fast | full")
        ->check(CLI::IsMember({"fast", "full"}));

    try {
        // CLI11's vector-parse entry point wants the arguments reversed.
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));

        if (c_list->parsed()) return cmd_list(format, out);
        if (c_verify->parsed()) return cmd_verify(input, mode, level, format, out);
        Built b = make_built(input, mode);
        if (c_quiver->parsed()) return cmd_quiver(b, format, out);
        if (c_kostant->parsed()) return cmd_kostant(b, k, format, out);
        return cmd_poincare(b, k, node, format, out);
    } catch (const CLI::ParseError& e) {
        // --help lands here with exit code 0; real parse errors map to the
        // bad-input code.
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const identity_error& e) {
        err << "identity violation: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace mckay
