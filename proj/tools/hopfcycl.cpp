// hopfcycl: command-line driver for the homology engines.
//
//   hopfcycl <verify|hh|hc|cm-hc|compare|report> [algebra] [options]
//
// Exit status: 0 all comparisons pass, 1 a comparison failed, 2 bad input or
// unsupported combination, 3 resource cap.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hopfcycl/groups.hpp"
#include "hopfcycl/quivers.hpp"
#include "json.hpp"

using namespace hopfcycl;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string command;
    std::string group, group_file, quiver, quiver_file, ring, pi, alpha = "eps", beta = "eps";
    std::string format = "json", compare;
    unsigned taft = 0, truncation = 2, max_degree = 3, max_grade = 4;
    bool trivial = false;
};

enum class Source { Group, Taft, Quiver };

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

unsigned parse_index(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        if (used != text.size() || v < 0) throw std::invalid_argument(text);
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw Error(Errc::ParseError, std::string("bad ") + what + " '" + text + "'");
    }
}

json module_json(const HomologyModule& m) {
    json j;
    j["text"] = m.to_string();
    j["free_rank"] = m.free_rank;
    json t = json::array();
    for (const auto& d : m.torsion) t.push_back(d.get_str());
    j["torsion"] = t;
    return j;
}

// ---------------------------------------------------------------- result tables

struct Row {
    json key;                                        // {"degree": p} or {"degree": p, "grade": q}
    std::vector<std::pair<std::string, json>> cells; // provenance -> value
};

struct Table {
    std::vector<std::string> columns;
    std::vector<Row> rows;
    bool compare = true;  // rows carry pass/fail
};

// A cell is either a HomologyModule descriptor, a plain integer dimension or {"skipped": reason}.
std::string cell_text(const json& c) {
    if (c.is_object() && c.contains("text")) return c["text"].get<std::string>();
    if (c.is_object() && c.contains("skipped")) return "-";
    return c.dump();
}

std::string cell_value(const json& c) {
    if (c.is_object() && c.contains("text")) return c["text"].get<std::string>();
    return c.dump();
}

bool row_pass(const Row& r) {
    std::optional<std::string> first;
    for (const auto& [name, c] : r.cells) {
        if (c.is_object() && c.contains("skipped")) continue;
        const std::string v = cell_value(c);
        if (!first) first = v;
        else if (*first != v) return false;
    }
    return true;
}

struct Output {
    json doc;
    bool pass = true;
    std::vector<std::string> diffs;
};

json table_json(const Table& t, Output& out) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        json j = r.key;
        json cells;
        for (const auto& [name, c] : r.cells) cells[name] = c;
        j["cells"] = cells;
        if (t.compare) {
            const bool ok = row_pass(r);
            j["pass"] = ok;
            if (!ok) {
                out.pass = false;
                std::string d = "mismatch at " + r.key.dump() + ":";
                for (const auto& [name, c] : r.cells) d += "\n  " + name + ": " + cell_text(c);
                out.diffs.push_back(d);
            }
        }
        rows.push_back(j);
    }
    json j;
    j["columns"] = t.columns;
    j["rows"] = rows;
    return j;
}

void render_text(const json& doc, std::ostream& os) {
    for (const auto& [k, v] : doc.items()) {
        if (k == "tables") continue;
        os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    if (!doc.contains("tables")) return;
    for (const auto& [name, t] : doc["tables"].items()) {
        os << "\n[" << name << "]\n";
        std::vector<std::string> header;
        std::vector<std::string> keys;
        if (!t["rows"].empty())
            for (const auto& [k, v] : t["rows"][0].items())
                if (k != "cells" && k != "pass") keys.push_back(k);
        header = keys;
        for (const auto& c : t["columns"]) header.push_back(c.get<std::string>());
        const bool has_pass = !t["rows"].empty() && t["rows"][0].contains("pass");
        if (has_pass) header.push_back("pass");
        std::vector<std::vector<std::string>> grid{header};
        for (const auto& r : t["rows"]) {
            std::vector<std::string> line;
            for (const auto& k : keys) line.push_back(r[k].is_string() ? r[k].get<std::string>() : r[k].dump());
            for (const auto& c : t["columns"]) {
                const auto& cells = r["cells"];
                line.push_back(cells.contains(c.get<std::string>()) ? cell_text(cells[c.get<std::string>()]) : "-");
            }
            if (has_pass) line.push_back(r["pass"].get<bool>() ? "ok" : "FAIL");
            grid.push_back(std::move(line));
        }
        std::vector<std::size_t> width(header.size(), 0);
        for (const auto& line : grid)
            for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
        for (const auto& line : grid) {
            std::string text;
            for (std::size_t i = 0; i < line.size(); ++i)
                text += (i ? "  " : "") + line[i] + std::string(width[i] - line[i].size(), ' ');
            text.erase(text.find_last_not_of(' ') + 1);
            os << text << "\n";
        }
    }
}

// ---------------------------------------------------------------- algebra selection

struct Job {
    Options opt;
    Source source = Source::Group;
    Ring ring = Ring::rationals();
    std::optional<FiniteGroup> group;
    std::optional<Quiver> quiver;
    std::optional<TaftAlgebra> taft;
    std::shared_ptr<const HopfAlgebraData> hopf;  // group algebra or Taft
    std::string label;
};

Job make_job(const Options& o) {
    Job job{o};
    const int sources = !o.group.empty() + !o.group_file.empty() + !o.quiver.empty() + !o.quiver_file.empty() +
                        (o.taft != 0) + o.trivial;
    if (sources != 1)
        throw Error(Errc::ParseError, "give exactly one of --group, --group-file, --quiver, --quiver-file, --taft, --trivial");
    if (o.taft != 0) {
        job.source = Source::Taft;
        job.ring = o.ring.empty() ? Ring::cyclotomic(o.taft) : Ring::parse(o.ring);
        job.taft = taft_hopf(o.taft, job.ring);
        job.hopf = job.taft->hopf;
        job.label = "taft:" + std::to_string(o.taft);
        return job;
    }
    job.ring = o.ring.empty() ? Ring::rationals() : Ring::parse(o.ring);
    if (!o.quiver.empty() || !o.quiver_file.empty()) {
        job.source = Source::Quiver;
        if (!o.quiver_file.empty()) {
            job.quiver = Quiver::from_json(read_file(o.quiver_file));
            job.label = o.quiver_file;
        } else if (o.quiver.rfind("crown:", 0) == 0) {
            job.quiver = Quiver::crown(parse_index(o.quiver.substr(6), "crown size"));
            job.label = o.quiver;
        } else if (o.quiver == "one-loop") {
            job.quiver = Quiver::one_loop();
            job.label = o.quiver;
        } else if (o.quiver == "a2") {
            job.quiver = Quiver::a2();
            job.label = o.quiver;
        } else {
            throw Error(Errc::ParseError, "unknown quiver '" + o.quiver + "' (crown:n, one-loop, a2)");
        }
        job.label += "/m^" + std::to_string(o.truncation);
        return job;
    }
    job.source = Source::Group;
    if (o.trivial) {
        job.group = FiniteGroup::cyclic(1);
        job.label = "trivial";
    } else if (!o.group_file.empty()) {
        job.group = FiniteGroup::from_json(read_file(o.group_file));
        job.label = o.group_file;
    } else if (o.group.rfind("cyclic:", 0) == 0) {
        job.group = FiniteGroup::cyclic(parse_index(o.group.substr(7), "group order"));
        job.label = o.group;
    } else if (o.group == "s3") {
        job.group = FiniteGroup::symmetric3();
        job.label = o.group;
    } else {
        throw Error(Errc::ParseError, "unknown group '" + o.group + "' (cyclic:m, s3)");
    }
    job.hopf = std::make_shared<const HopfAlgebraData>(group_algebra(*job.group, job.ring));
    return job;
}

// Characters of a group algebra: "eps", or j for g^k -> w^{jk} on a cyclic group
// (w the primitive root found in the ring), or an index into the enumerated list.
Character group_character(const Job& job, const std::string& text) {
    if (text == "eps") return counit_character(*job.hopf);
    const unsigned j = parse_index(text, "character");
    const FiniteGroup& g = *job.group;
    if (auto gen = g.cyclic_generator()) {
        const auto m = static_cast<unsigned>(g.order());
        const Scalar w = m == 1 ? Scalar::one(job.ring) : primitive_root_of_unity(job.ring, m);
        Character c{std::vector<Scalar>(m, Scalar::zero(job.ring))};
        for (unsigned k = 0; k < m; ++k) c.values[g.power(*gen, k)] = w.pow(static_cast<long>(j) * k);
        return c;
    }
    const auto all = enumerate_characters_monomial(job.hopf->algebra);
    if (j >= all.size()) throw Error(Errc::IndexOutOfRange, "character index " + text);
    return all[j];
}

struct Triple {
    GroupLike pi;
    Character alpha, beta;
    unsigned pi_index = 0;
};

Triple job_triple(const Job& job) {
    if (job.source == Source::Quiver) throw Error(Errc::UnsupportedCombination, "quiver algebras carry no Hopf structure; use --taft");
    Triple t;
    if (job.source == Source::Taft) {
        const auto& ta = *job.taft;
        t.pi_index = job.opt.pi.empty() ? 0 : parse_index(job.opt.pi, "grouplike");
        if (t.pi_index >= ta.n) throw Error(Errc::IndexOutOfRange, "grouplike index " + job.opt.pi);
        auto vertex = [&](const std::string& s) { return s == "eps" ? 0u : parse_index(s, "character"); };
        const unsigned u = vertex(job.opt.alpha), v = vertex(job.opt.beta);
        if (u >= ta.n || v >= ta.n) throw Error(Errc::IndexOutOfRange, "character index");
        t.pi = ta.grouplike(t.pi_index);
        t.alpha = ta.character(u);
        t.beta = ta.character(v);
        return t;
    }
    t.pi_index = job.opt.pi.empty() ? job.group->identity() : parse_index(job.opt.pi, "group element");
    if (t.pi_index >= job.group->order()) throw Error(Errc::IndexOutOfRange, "group element " + job.opt.pi);
    t.pi = group_element(job.ring, t.pi_index);
    t.alpha = group_character(job, job.opt.alpha);
    t.beta = group_character(job, job.opt.beta);
    return t;
}

json triple_label(const Job& job, const Triple& t) {
    auto chr = [](const std::string& s) -> json {
        if (s == "eps") return s;
        return parse_index(s, "character");
    };
    return {{"pi", t.pi_index}, {"alpha", chr(job.opt.alpha)}, {"beta", chr(job.opt.beta)}};
}

json skipped(const Error& e) { return json{{"skipped", errc_name(e.code())}}; }

template <class F>
json attempt(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == Errc::ResourceCap) throw;
        return skipped(e);
    }
}

// ---------------------------------------------------------------- commands

json verify_axioms_json(const AxiomReport& r) {
    json j;
    for (const auto& [name, ok] : r.items) j[name] = ok;
    return j;
}

void cmd_verify(const Job& job, Output& out) {
    const unsigned N = job.opt.max_degree;
    if (job.source == Source::Quiver) {
        const TruncatedPathAlgebra a(*job.quiver, job.opt.truncation, job.ring);
        const auto rep = check_resolution(a, skoldberg_resolution(a, N + 1));
        out.doc["resolution"] = {{"squares_to_zero", rep.squares_to_zero},
                                 {"grade_preserving", rep.grade_preserving},
                                 {"exact", rep.exact},
                                 {"failures", rep.failures}};
        out.pass = rep.squares_to_zero && rep.grade_preserving && rep.exact;
        return;
    }
    const auto hopf_report = verify_hopf_axioms(*job.hopf);
    out.doc["hopf_axioms"] = verify_axioms_json(hopf_report);
    out.pass = hopf_report.all_pass();

    std::vector<Triple> triples;
    std::vector<json> labels;
    if (!job.opt.pi.empty()) {
        triples.push_back(job_triple(job));
        labels.push_back(triple_label(job, triples.back()));
    } else if (job.source == Source::Taft) {
        for (const auto& tr : taft_cm_triples(*job.taft)) {
            if (!tr.by_matrix) continue;
            triples.push_back({job.taft->grouplike(tr.i), job.taft->character(tr.u), job.taft->character(tr.v), tr.i});
            labels.push_back({{"pi", tr.i}, {"alpha", tr.u}, {"beta", tr.v}});
        }
    } else {
        const Character eps = counit_character(*job.hopf);
        for (std::uint32_t g = 0; g < job.group->order(); ++g) {
            const auto t = check_cm_triple(*job.hopf, group_element(job.ring, g), eps, eps);
            if (!t.valid) continue;
            triples.push_back({t.pi, eps, eps, g});
            labels.push_back({{"pi", g}, {"alpha", "eps"}, {"beta", "eps"}});
        }
    }
    json list = json::array();
    for (std::size_t k = 0; k < triples.size(); ++k) {
        const auto& t = triples[k];
        const auto cm = check_cm_triple(*job.hopf, t.pi, t.alpha, t.beta);
        json j = labels[k];
        j["valid"] = cm.valid;
        if (!cm.valid) {
            j["failure"] = cm.failure;
            out.pass = false;
        } else {
            const HopfCyclicModule m(job.hopf, cm);
            const auto rep = verify_cyclic_axioms(m, N);
            j["axioms_pass"] = rep.all_pass();
            j["failures"] = rep.failures();
            if (!rep.all_pass()) out.pass = false;
        }
        list.push_back(j);
    }
    out.doc["triples"] = list;
}

Table cm_table(const Job& job, const Triple& t, bool want_closed) {
    const unsigned N = job.opt.max_degree;
    const HopfCyclicModule m(job.hopf, check_cm_triple(*job.hopf, t.pi, t.alpha, t.beta));
    Table table;
    table.columns = {"computed-bicomplex", "computed-lambda", "closed-formula"};
    const bool eps_pair = job.opt.alpha == "eps" && job.opt.beta == "eps";
    for (unsigned p = 0; p <= N; ++p) {
        Row r{{{"degree", p}}, {}};
        r.cells.emplace_back("computed-bicomplex", module_json(cyclic_bicomplex_hc(m, p)));
        r.cells.emplace_back("computed-lambda", attempt([&] { return module_json(connes_lambda_hc(m, p)); }));
        json closed = json{{"skipped", "UnsupportedCombination"}};
        if (job.source == Source::Taft) {
            const auto& ta = *job.taft;
            auto vertex = [&](const std::string& s) { return s == "eps" ? 0u : parse_index(s, "character"); };
            closed = module_json(HomologyModule::free(
                job.ring, taft_cm_closed(ta.n, t.pi_index, vertex(job.opt.alpha), vertex(job.opt.beta), p)));
        } else if (job.group->cyclic_generator() && eps_pair) {
            closed = module_json(closed_hc_cyclic_group(job.ring, index_of_cyclic_subgroup(*job.group, t.pi_index), p));
        }
        if (want_closed && closed.contains("skipped"))
            throw Error(Errc::UnsupportedCombination, "no closed formula for this algebra and triple");
        r.cells.emplace_back("closed-formula", closed);
        table.rows.push_back(std::move(r));
    }
    return table;
}

void cmd_cm_hc(const Job& job, Output& out) {
    const Triple t = job_triple(job);
    out.doc["triple"] = triple_label(job, t);
    out.doc["tables"]["hc"] = table_json(cm_table(job, t, job.opt.compare == "closed"), out);
}

Table quiver_hh_table(const Job& job) {
    const unsigned N = job.opt.max_degree;
    const unsigned n = job.opt.truncation;
    Table table;
    if (n == 0) {
        const auto h = path_algebra_hh(*job.quiver, job.opt.max_grade, job.ring);
        table.columns = {"resolution"};
        table.compare = false;
        for (unsigned p = 0; p <= 1; ++p)
            for (std::size_t g = 0; g <= job.opt.max_grade; ++g)
                table.rows.push_back({{{"degree", p}, {"grade", g}},
                                      {{"resolution", module_json(HomologyModule::free(job.ring, p ? h.hh1[g] : h.hh0[g]))}}});
        return table;
    }
    if (n == 1) {
        const TruncatedPathAlgebra a(*job.quiver, 1, job.ring);
        const auto w = algebra_hochschild_window(*a.algebra(), N + 1);
        table.columns = {"computed-bicomplex"};
        table.compare = false;
        for (unsigned p = 0; p <= N; ++p) table.rows.push_back({{{"degree", p}}, {{"computed-bicomplex", module_json(w.homology(p))}}});
        return table;
    }
    const TruncatedPathAlgebra a(*job.quiver, n, job.ring);
    const auto w = skoldberg_hochschild_complex(a, N + 1);
    table.columns = {"resolution", "closed-formula"};
    for (unsigned p = 0; p <= N; ++p) {
        const std::size_t top = anick_green_length(n, p) + n;
        for (std::size_t g = 0; g <= top; ++g) {
            const auto& gr = w.grades[p];
            const auto res = std::find(gr.begin(), gr.end(), g) == gr.end() ? HomologyModule::zero(job.ring) : w.homology(p, g);
            const auto closed = hh_closed_form(*job.quiver, n, p, g, job.ring);
            if (res.is_zero() && closed.is_zero()) continue;
            table.rows.push_back({{{"degree", p}, {"grade", g}},
                                  {{"resolution", module_json(res)}, {"closed-formula", module_json(closed)}}});
        }
    }
    return table;
}

void cmd_hh(const Job& job, Output& out) {
    const unsigned N = job.opt.max_degree;
    if (job.source == Source::Quiver) {
        out.doc["tables"]["hh"] = table_json(quiver_hh_table(job), out);
        return;
    }
    const Triple t = job_triple(job);
    const HopfCyclicModule m(job.hopf, check_cm_triple(*job.hopf, t.pi, t.alpha, t.beta));
    const auto w = hochschild_window(m, N + 1);
    Table table;
    table.columns = {"computed-bicomplex"};
    table.compare = false;
    for (unsigned p = 0; p <= N; ++p) table.rows.push_back({{{"degree", p}}, {{"computed-bicomplex", module_json(w.homology(p))}}});
    out.doc["triple"] = triple_label(job, t);
    out.doc["tables"]["hh"] = table_json(table, out);
}

Table quiver_hc_table(const Job& job) {
    const unsigned N = job.opt.max_degree;
    const unsigned n = job.opt.truncation;
    if (n == 0) throw Error(Errc::UnsupportedCombination, "cyclic homology of the full path algebra is infinite dimensional");
    const TruncatedPathAlgebra a(*job.quiver, n, job.ring);
    const ClassicalCyclicModule cm(a.algebra());
    std::vector<std::size_t> sbi;
    json sbi_error;
    if (n >= 2) {
        try {
            sbi = graded_sbi_hc(a, N);
        } catch (const Error& e) {
            if (e.code() == Errc::ResourceCap) throw;
            sbi_error = skipped(e);
        }
    }
    Table table;
    table.columns = {"computed-bicomplex", "resolution", "closed-formula"};
    for (unsigned p = 0; p <= N; ++p) {
        Row r{{{"degree", p}}, {}};
        r.cells.emplace_back("computed-bicomplex", attempt([&] { return module_json(cyclic_bicomplex_hc(cm, p)); }));
        if (n >= 2) {
            r.cells.emplace_back("resolution", sbi.empty() ? sbi_error : module_json(HomologyModule::free(job.ring, sbi[p])));
            r.cells.emplace_back("closed-formula", attempt([&] {
                                     if (!job.ring.contains_rationals())
                                         throw Error(Errc::RingWithoutRationals, "dimension formula");
                                     return module_json(HomologyModule::free(job.ring, hc_closed_form_truncated(*job.quiver, n, p)));
                                 }));
        } else {
            r.cells.emplace_back("closed-formula", module_json(HomologyModule::free(job.ring, p % 2 ? 0 : job.quiver->vertices.size())));
        }
        table.rows.push_back(std::move(r));
    }
    return table;
}

void cmd_hc(const Job& job, Output& out) {
    if (job.source == Source::Quiver) {
        out.doc["tables"]["hc"] = table_json(quiver_hc_table(job), out);
        return;
    }
    if (!job.opt.pi.empty()) {
        cmd_cm_hc(job, out);
        return;
    }
    // classical cyclic homology of the underlying algebra
    const unsigned N = job.opt.max_degree;
    const ClassicalCyclicModule cm(std::make_shared<const AlgebraData>(job.hopf->algebra));
    std::vector<std::size_t> sbi;
    if (job.source == Source::Taft && job.ring.contains_rationals()) sbi = graded_sbi_hc(*job.taft->algebra, N);
    Table table;
    table.columns = {"computed-bicomplex", "computed-lambda", "closed-formula"};
    for (unsigned p = 0; p <= N; ++p) {
        Row r{{{"degree", p}}, {}};
        r.cells.emplace_back("computed-bicomplex", attempt([&] { return module_json(cyclic_bicomplex_hc(cm, p)); }));
        r.cells.emplace_back("computed-lambda", attempt([&] { return module_json(connes_lambda_hc(cm, p)); }));
        if (job.source == Source::Taft) {
            if (!sbi.empty()) r.cells.emplace_back("resolution", module_json(HomologyModule::free(job.ring, sbi[p])));
            r.cells.emplace_back("closed-formula", attempt([&] {
                                     if (!job.ring.contains_rationals())
                                         throw Error(Errc::RingWithoutRationals, "dimension formula");
                                     return module_json(HomologyModule::free(
                                         job.ring, hc_closed_form_truncated(job.taft->algebra->quiver(), job.taft->n, p)));
                                 }));
        } else {
            r.cells.emplace_back("closed-formula",
                                 attempt([&] { return module_json(closed_hc_group_algebra(*job.group, job.ring, p)); }));
        }
        table.rows.push_back(std::move(r));
    }
    if (job.source == Source::Taft) table.columns.insert(table.columns.begin() + 2, "resolution");
    out.doc["tables"]["hc"] = table_json(table, out);
}

void cmd_compare(const Job& job, Output& out) {
    const unsigned N = job.opt.max_degree;
    if (job.source == Source::Quiver) {
        if (job.opt.truncation < 2) throw Error(Errc::UnsupportedCombination, "compare needs --truncation >= 2");
        const TruncatedPathAlgebra a(*job.quiver, job.opt.truncation, job.ring);
        const auto sk = skoldberg_hochschild_complex(a, N + 1);
        const auto bar = relative_bar_complex(a, N + 1);
        Table hh;
        hh.columns = {"resolution", "computed-bicomplex", "closed-formula"};
        for (unsigned p = 0; p <= N; ++p) {
            const std::size_t top = anick_green_length(job.opt.truncation, p) + job.opt.truncation;
            for (std::size_t g = 0; g <= top; ++g) {
                auto at = [&](const GradedWindow& w) {
                    const auto& gr = w.grades[p];
                    return std::find(gr.begin(), gr.end(), g) == gr.end() ? HomologyModule::zero(job.ring) : w.homology(p, g);
                };
                const auto x = at(sk), y = at(bar), z = hh_closed_form(*job.quiver, job.opt.truncation, p, g, job.ring);
                if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
                hh.rows.push_back({{{"degree", p}, {"grade", g}},
                                   {{"resolution", module_json(x)}, {"computed-bicomplex", module_json(y)}, {"closed-formula", module_json(z)}}});
            }
        }
        out.doc["tables"]["hh"] = table_json(hh, out);
        out.doc["tables"]["hc"] = table_json(quiver_hc_table(job), out);
        return;
    }
    if (job.source == Source::Taft) throw Error(Errc::UnsupportedCombination, "use 'report' for Taft algebras");
    const auto rep = burghelea_check(*job.group, job.ring, N);
    Table t;
    t.columns = {"classical", "sum-over-classes"};
    for (unsigned p = 0; p <= N; ++p)
        t.rows.push_back({{{"degree", p}}, {{"classical", rep.classical[p]}, {"sum-over-classes", rep.summed[p]}}});
    out.doc["tables"]["burghelea"] = table_json(t, out);
}

void cmd_report(const Job& job, Output& out) {
    const unsigned N = job.opt.max_degree;
    if (job.source == Source::Taft) {
        const auto& ta = *job.taft;
        json triples = json::array();
        Table all;
        all.columns = {"computed-bicomplex", "computed-lambda", "closed-formula"};
        for (const auto& tr : taft_cm_triples(ta)) {
            triples.push_back({{"pi", tr.i}, {"alpha", tr.u}, {"beta", tr.v},
                               {"congruence", tr.by_congruence}, {"matrix", tr.by_matrix}});
            if (tr.by_congruence != tr.by_matrix) {
                out.pass = false;
                out.diffs.push_back("triple verdicts differ at (" + std::to_string(tr.i) + ", " + std::to_string(tr.u) +
                                    ", " + std::to_string(tr.v) + ")");
            }
            if (!tr.by_matrix) continue;
            Job sub = job;
            sub.opt.pi = std::to_string(tr.i);
            sub.opt.alpha = std::to_string(tr.u);
            sub.opt.beta = std::to_string(tr.v);
            for (auto& r : cm_table(sub, job_triple(sub), false).rows) {
                json key = {{"pi", tr.i}, {"alpha", tr.u}, {"beta", tr.v}};
                key["degree"] = r.key["degree"];
                r.key = key;
                all.rows.push_back(std::move(r));
            }
        }
        out.doc["triples"] = triples;
        out.doc["tables"]["cm_hc"] = table_json(all, out);
        Table dec;
        dec.columns = {"classical", "sum-over-triples"};
        dec.compare = false;
        for (const auto& r : taft_decomposition_report(ta, N))
            dec.rows.push_back({{{"degree", r.degree}}, {{"classical", r.classical}, {"sum-over-triples", r.cm_sum}}});
        out.doc["tables"]["decomposition"] = table_json(dec, out);
        return;
    }
    if (job.source == Source::Quiver) {
        Table cyc;
        cyc.columns = {"a_q", "b_q"};
        cyc.compare = false;
        for (std::size_t q = 1; q <= job.opt.max_grade; ++q) {
            const auto c = cycle_orbit_counts(*job.quiver, q);
            cyc.rows.push_back({{{"grade", q}}, {{"a_q", c.a_q}, {"b_q", c.b[q]}}});
        }
        out.doc["tables"]["cycles"] = table_json(cyc, out);
        out.doc["tables"]["hh"] = table_json(quiver_hh_table(job), out);
        return;
    }
    const auto rep = burghelea_check(*job.group, job.ring, N);
    Table cls;
    cls.columns = {"computed-bicomplex", "closed-formula"};
    for (const auto& c : rep.classes) {
        for (unsigned p = 0; p <= N; ++p) {
            Row r{{{"representative", c.representative}, {"centralizer_order", c.centralizer_order}, {"degree", p}}, {}};
            r.cells.emplace_back("computed-bicomplex", c.hc[p]);
            const FiniteGroup z = centralizer(*job.group, c.representative).group;
            r.cells.emplace_back("closed-formula", attempt([&]() -> json {
                                     if (!z.cyclic_generator() || !job.ring.is_field())
                                         throw Error(Errc::UnsupportedCombination, "closed formula");
                                     const Subgroup s = centralizer(*job.group, c.representative);
                                     return closed_hc_cyclic_group(job.ring,
                                                                   index_of_cyclic_subgroup(s.group, s.local_index(c.representative)), p)
                                         .dimension();
                                 }));
            cls.rows.push_back(std::move(r));
        }
    }
    out.doc["tables"]["classes"] = table_json(cls, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild and cyclic homology of Hopf algebras, group algebras and truncated quiver algebras"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", o.group, "cyclic:m or s3");
        sub->add_option("--group-file", o.group_file, "JSON group table");
        sub->add_option("--quiver", o.quiver, "crown:n, one-loop or a2");
        sub->add_option("--quiver-file", o.quiver_file, "JSON quiver");
        sub->add_option("--truncation", o.truncation, "n in kQ/m^n (0 for the path algebra)");
        sub->add_option("--taft", o.taft, "Taft algebra Lambda_n");
        sub->add_flag("--trivial", o.trivial, "the trivial Hopf algebra k");
        sub->add_option("--ring", o.ring, "Z, Q, Z/m, Fp or Q(zetan)");
        sub->add_option("--pi", o.pi, "grouplike: group element or Taft index");
        sub->add_option("--alpha", o.alpha, "character: eps or index");
        sub->add_option("--beta", o.beta, "character: eps or index");
        sub->add_option("--max-degree", o.max_degree, "highest homological degree");
        sub->add_option("--max-grade", o.max_grade, "highest path-length grade");
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--compare", o.compare, "require a closed-formula column")->check(CLI::IsMember({"closed"}));
    };
    for (const char* name : {"verify", "hh", "hc", "cm-hc", "compare", "report"}) {
        auto* sub = app.add_subcommand(name);
        add_common(sub);
        sub->callback([&o, name] { o.command = name; });
    }
    CLI11_PARSE(app, argc, argv);

    Output out;
    try {
        const Job job = make_job(o);
        out.doc["command"] = o.command;
        out.doc["algebra"] = job.label;
        out.doc["ring"] = job.ring.to_string();
        out.doc["max_degree"] = o.max_degree;
        if (o.command == "verify") cmd_verify(job, out);
        else if (o.command == "hh") cmd_hh(job, out);
        else if (o.command == "hc") cmd_hc(job, out);
        else if (o.command == "cm-hc") cmd_cm_hc(job, out);
        else if (o.command == "compare") cmd_compare(job, out);
        else cmd_report(job, out);
    } catch (const Error& e) {
        json err{{"error", errc_name(e.code())}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return e.code() == Errc::ResourceCap ? 3 : 2;
    }
    out.doc["pass"] = out.pass;
    if (o.format == "json") std::cout << out.doc.dump(2) << "\n";
    else render_text(out.doc, std::cout);
    for (const auto& d : out.diffs) std::cerr << d << "\n";
    return out.pass ? 0 : 1;
}
