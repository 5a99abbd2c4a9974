#include "tvb/io.hpp"

#include <fstream>
#include <sstream>

namespace tvb {

using nlohmann::ordered_json;

namespace {

std::string path_str(const std::string& path) { return path.empty() ? "document" : path; }

const nlohmann::json& expect_field(const nlohmann::json& j, const std::string& key,
                                   const std::string& path) {
    if (!j.is_object()) throw ParseError(path_str(path) + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(path_str(path) + ": missing field \"" + key + "\"");
    return *it;
}

long long expect_int(const nlohmann::json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path_str(path) + ": expected an integer");
    return j.get<long long>();
}

Rational expect_rational(const nlohmann::json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return rational_from_string(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(path_str(path) + ": " + e.what());
        }
    }
    throw ParseError(path_str(path) + ": expected an integer or a \"p/q\" string");
}

const nlohmann::json& expect_array(const nlohmann::json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path_str(path) + ": expected an array");
    return j;
}

}  // namespace

BundleFile parse_bundle_file(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document: expected an object");

    BundleFile bf;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("name: expected a string");
        bf.name = doc["name"].get<std::string>();
    }
    ToricBundle& b = bf.bundle;
    const long long d = expect_int(expect_field(doc, "lattice_rank", ""), "lattice_rank");
    if (d < 1 || d > 16) throw ParseError("lattice_rank: must be between 1 and 16");
    b.fan.lattice_rank = static_cast<int>(d);

    const auto& rays = expect_array(expect_field(doc, "rays", ""), "rays");
    for (size_t i = 0; i < rays.size(); i++) {
        const std::string path = "rays[" + std::to_string(i) + "]";
        const auto& rj = expect_array(rays[i], path);
        if (rj.size() != static_cast<size_t>(d)) {
            throw ParseError(path + ": expected " + std::to_string(d) + " coordinates");
        }
        IntVec v;
        for (size_t k = 0; k < rj.size(); k++) {
            v.push_back(expect_int(rj[k], path + "[" + std::to_string(k) + "]"));
        }
        b.fan.rays.push_back(std::move(v));
    }

    const auto& cones = expect_array(expect_field(doc, "max_cones", ""), "max_cones");
    for (size_t i = 0; i < cones.size(); i++) {
        const std::string path = "max_cones[" + std::to_string(i) + "]";
        const auto& cj = expect_array(cones[i], path);
        std::vector<int> cone;
        for (size_t k = 0; k < cj.size(); k++) {
            const long long r = expect_int(cj[k], path + "[" + std::to_string(k) + "]");
            if (r < 1 || r > static_cast<long long>(b.fan.rays.size())) {
                throw ParseError(path + "[" + std::to_string(k) + "]: ray index out of range (1.." +
                                 std::to_string(b.fan.rays.size()) + ")");
            }
            cone.push_back(static_cast<int>(r - 1));
        }
        b.fan.max_cones.push_back(std::move(cone));
    }

    const long long rank = expect_int(expect_field(doc, "rank", ""), "rank");
    if (rank < 1 || rank > 64) throw ParseError("rank: must be between 1 and 64");
    b.rank = static_cast<int>(rank);

    const auto& filts = expect_array(expect_field(doc, "filtrations", ""), "filtrations");
    if (filts.size() != b.fan.rays.size()) {
        throw ParseError("filtrations: expected one entry per ray (" +
                         std::to_string(b.fan.rays.size()) + ")");
    }
    b.filtrations.resize(b.fan.rays.size());
    std::vector<bool> seen(b.fan.rays.size(), false);
    for (size_t i = 0; i < filts.size(); i++) {
        const std::string path = "filtrations[" + std::to_string(i) + "]";
        const long long ray = expect_int(expect_field(filts[i], "ray", path), path + ".ray");
        if (ray < 1 || ray > static_cast<long long>(b.fan.rays.size())) {
            throw ParseError(path + ".ray: out of range");
        }
        if (seen[ray - 1]) throw ParseError(path + ".ray: duplicate filtration for ray " + std::to_string(ray));
        seen[ray - 1] = true;
        Filtration f;
        const auto& steps = expect_array(expect_field(filts[i], "steps", path), path + ".steps");
        if (steps.empty()) throw ParseError(path + ".steps: need at least one step");
        for (size_t s = 0; s < steps.size(); s++) {
            const std::string spath = path + ".steps[" + std::to_string(s) + "]";
            FiltrationStep step;
            step.through = expect_int(expect_field(steps[s], "through", spath), spath + ".through");
            const auto& span = expect_array(expect_field(steps[s], "span", spath), spath + ".span");
            QMat rows;
            for (size_t v = 0; v < span.size(); v++) {
                const std::string vpath = spath + ".span[" + std::to_string(v) + "]";
                const auto& vj = expect_array(span[v], vpath);
                if (vj.size() != static_cast<size_t>(b.rank)) {
                    throw ParseError(vpath + ": expected " + std::to_string(b.rank) + " coordinates");
                }
                QVec row;
                for (size_t k = 0; k < vj.size(); k++) {
                    row.push_back(expect_rational(vj[k], vpath + "[" + std::to_string(k) + "]"));
                }
                rows.push_back(std::move(row));
            }
            step.span = Subspace::span_of(std::move(rows), b.rank);
            f.steps.push_back(std::move(step));
        }
        b.filtrations[ray - 1] = std::move(f);
    }
    return bf;
}

BundleFile load_bundle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bundle_file(buf.str());
}

nlohmann::ordered_json json_qvec(const QVec& v) {
    ordered_json out = ordered_json::array();
    for (const Rational& x : v) {
        if (is_integer(x) && x.get_num().fits_slong_p()) {
            out.push_back(static_cast<long long>(x.get_num().get_si()));
        } else {
            out.push_back(rational_to_string(x));
        }
    }
    return out;
}

namespace {

ordered_json json_span(const Subspace& s) {
    ordered_json rows = ordered_json::array();
    for (const QVec& row : s.basis()) rows.push_back(json_qvec(row));
    return rows;
}

ordered_json json_intvec(const IntVec& v) {
    ordered_json out = ordered_json::array();
    for (long long x : v) out.push_back(x);
    return out;
}

ordered_json json_one_indexed(const std::vector<int>& v) {
    ordered_json out = ordered_json::array();
    for (int x : v) out.push_back(x + 1);
    return out;
}

}  // namespace

std::string serialize_bundle_file(const BundleFile& bf) {
    ordered_json doc;
    if (bf.name) doc["name"] = *bf.name;
    const ToricBundle& b = bf.bundle;
    doc["lattice_rank"] = b.fan.lattice_rank;
    doc["rays"] = ordered_json::array();
    for (const IntVec& v : b.fan.rays) doc["rays"].push_back(json_intvec(v));
    doc["max_cones"] = ordered_json::array();
    for (const auto& c : b.fan.max_cones) doc["max_cones"].push_back(json_one_indexed(c));
    doc["rank"] = b.rank;
    doc["filtrations"] = ordered_json::array();
    for (size_t i = 0; i < b.filtrations.size(); i++) {
        ordered_json fj;
        fj["ray"] = i + 1;
        fj["steps"] = ordered_json::array();
        for (const FiltrationStep& s : b.filtrations[i].steps) {
            ordered_json sj;
            sj["through"] = s.through;
            sj["span"] = json_span(s.span);
            fj["steps"].push_back(std::move(sj));
        }
        doc["filtrations"].push_back(std::move(fj));
    }
    return doc.dump(2) + "\n";
}

std::string Report::to_json() const {
    ordered_json doc;
    doc["command"] = command;
    for (const auto& [k, v] : body.items()) doc[k] = v;
    return doc.dump(2) + "\n";
}

namespace {

bool scalar_array(const ordered_json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const ordered_json& x) {
        return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const ordered_json& y) {
                   return y.is_primitive();
               }));
    });
}

std::string inline_value(const ordered_json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render_text(const ordered_json& j, const std::string& indent, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_primitive() || scalar_array(v)) {
                os << indent << k << ": " << inline_value(v) << "\n";
            } else {
                os << indent << k << ":\n";
                render_text(v, indent + "  ", os);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_primitive() || scalar_array(v)) {
                os << indent << "- " << inline_value(v) << "\n";
            } else {
                os << indent << "-\n";
                render_text(v, indent + "  ", os);
            }
        }
    } else {
        os << indent << inline_value(j) << "\n";
    }
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    render_text(body, "", os);
    return os.str();
}

namespace {

ordered_json bundle_summary(const BundleFile& bf) {
    ordered_json out;
    if (bf.name) out["name"] = *bf.name;
    out["lattice_rank"] = bf.bundle.fan.lattice_rank;
    out["rays"] = static_cast<int>(bf.bundle.fan.rays.size());
    out["max_cones"] = static_cast<int>(bf.bundle.fan.max_cones.size());
    out["rank"] = bf.bundle.rank;
    return out;
}

ordered_json json_parliament(const BundleAnalysis& a) {
    ordered_json arr = ordered_json::array();
    for (const ParliamentPolytope& p : a.parliament) {
        ordered_json pj;
        pj["vector"] = json_qvec(p.e);
        pj["bounds"] = json_intvec(IntVec(p.bounds.begin(), p.bounds.end()));
        pj["empty"] = p.is_empty;
        pj["vertices"] = ordered_json::array();
        for (const QVec& v : p.vertices) pj["vertices"].push_back(json_qvec(v));
        pj["lattice_points"] = ordered_json::array();
        for (const IntVec& v : p.lattice_points) pj["lattice_points"].push_back(json_intvec(v));
        arr.push_back(std::move(pj));
    }
    return arr;
}

ordered_json json_characters(const BundleAnalysis& a) {
    ordered_json arr = ordered_json::array();
    for (size_t k = 0; k < a.characters.size(); k++) {
        ordered_json cj;
        cj["cone"] = k + 1;
        cj["rays"] = json_one_indexed(a.bundle.fan.max_cones[k]);
        cj["characters"] = ordered_json::array();
        for (const CharacterCount& cc : a.characters[k]) {
            ordered_json one;
            one["u"] = json_intvec(cc.u);
            one["multiplicity"] = cc.multiplicity;
            cj["characters"].push_back(std::move(one));
        }
        arr.push_back(std::move(cj));
    }
    return arr;
}

ordered_json json_splittings(const BundleAnalysis& a) {
    ordered_json arr = ordered_json::array();
    for (const ConeSplitting& s : a.splittings) {
        ordered_json sj;
        sj["cone"] = s.cone + 1;
        sj["entries"] = ordered_json::array();
        for (const SplitEntry& e : s.entries) {
            ordered_json ej;
            ej["u"] = json_intvec(e.u);
            ej["vector"] = json_qvec(e.vector);
            ej["ground_index"] = e.ground_index;
            sj["entries"].push_back(std::move(ej));
        }
        arr.push_back(std::move(sj));
    }
    return arr;
}

ordered_json json_sections(const SectionsTable& t) {
    ordered_json out;
    out["h0"] = t.h0;
    out["weights"] = ordered_json::array();
    for (const SectionEntry& e : t.entries) {
        ordered_json ej;
        ej["u"] = json_intvec(e.u);
        ej["dim"] = e.dim;
        out["weights"].push_back(std::move(ej));
    }
    return out;
}

ordered_json json_wall(const Wall& w) {
    ordered_json out;
    out["rays"] = json_one_indexed(w.ray_indices);
    out["left_cone"] = w.left_cone + 1;
    out["right_cone"] = w.right_cone + 1;
    out["m_tau"] = json_intvec(w.m_tau);
    out["v_tau"] = json_intvec(w.v_tau);
    return out;
}

ordered_json json_restriction(const CurveSplitting& cs) {
    ordered_json out;
    out["wall"] = json_wall(cs.wall);
    out["v0_coefficients"] = json_intvec(cs.v0_coefficients);
    out["summands"] = ordered_json::array();
    ordered_json degrees = ordered_json::array();
    for (const CurvePair& p : cs.pairs) {
        ordered_json pj;
        pj["u_left"] = json_intvec(p.u_left);
        pj["u_right"] = json_intvec(p.u_right);
        pj["degree"] = p.degree;
        out["summands"].push_back(std::move(pj));
        degrees.push_back(p.degree);
    }
    out["degrees"] = std::move(degrees);
    return out;
}

ordered_json json_ground(const BundleAnalysis& a) {
    ordered_json out = ordered_json::array();
    for (const QVec& v : a.ground.vectors) out.push_back(json_qvec(v));
    return out;
}

}  // namespace

ordered_json json_positivity(const PositivityReport& r) {
    ordered_json out;
    out["globally_generated"] = r.globally_generated;
    if (r.gg_witness) {
        ordered_json w;
        w["cone"] = r.gg_witness->cone + 1;
        w["u"] = json_intvec(r.gg_witness->u);
        w["missing_direction"] = json_qvec(r.gg_witness->missing_direction);
        out["gg_witness"] = std::move(w);
    }
    ordered_json jets;
    for (const auto& [k, ok] : r.k_jet_ample) jets[std::to_string(k)] = ok;
    out["k_jet_ample"] = std::move(jets);
    ordered_json jw = ordered_json::array();
    for (const auto& [k, w] : r.jet_witnesses) {
        ordered_json wj;
        wj["order"] = k;
        wj["cone"] = w.cone + 1;
        wj["u"] = json_intvec(w.u);
        wj["outside_point"] = json_intvec(w.outside_point);
        jw.push_back(std::move(wj));
    }
    if (!jw.empty()) out["jet_witnesses"] = std::move(jw);
    out["very_ample"] = r.very_ample;
    out["ample"] = r.ample;
    out["nef"] = r.nef;
    out["splits_into_line_bundles"] = r.splits_into_line_bundles;
    return out;
}

Report validation_report(const BundleFile& bf, int* exit_code) {
    Report rep;
    rep.command = "validate";
    rep.body = bundle_summary(bf);
    const FanValidation fv = validate(bf.bundle.fan);
    ordered_json fan_json;
    fan_json["smooth"] = fv.smooth;
    fan_json["complete"] = fv.complete;
    fan_json["problems"] = fv.problems;
    rep.body["fan"] = std::move(fan_json);

    bool structure_ok = true;
    ordered_json structure;
    try {
        validate_bundle_structure(bf.bundle);
        structure["ok"] = true;
    } catch (const ValidationError& e) {
        structure_ok = false;
        structure["ok"] = false;
        structure["problem"] = e.what();
    }
    rep.body["structure"] = std::move(structure);

    int code = 0;
    if (!fv.ok() || !structure_ok) {
        code = 1;
        rep.body["compatible"] = nullptr;
    } else {
        try {
            analyze(bf.bundle);
            rep.body["compatible"] = true;
        } catch (const IncompatibleFiltrations& e) {
            code = 2;
            rep.body["compatible"] = false;
            rep.body["incompatibility"] = e.what();
        }
    }
    rep.body["valid"] = (code == 0);
    if (exit_code) *exit_code = code;
    return rep;
}

Report parliament_report(const BundleFile& bf, const BundleAnalysis& a) {
    Report rep;
    rep.command = "parliament";
    rep.body = bundle_summary(bf);
    rep.body["ground_set"] = json_ground(a);
    rep.body["splits_into_line_bundles"] = splits_equivariantly(a.ground, a.bundle.rank);
    rep.body["polytopes"] = json_parliament(a);
    rep.body["cone_characters"] = json_characters(a);
    return rep;
}

Report sections_report(const BundleFile& bf, const BundleAnalysis& a) {
    Report rep;
    rep.command = "sections";
    rep.body = bundle_summary(bf);
    rep.body["sections"] = json_sections(a.sections);
    return rep;
}

Report positivity_command_report(const BundleFile& bf, const BundleAnalysis& a,
                                 const std::vector<long long>& jet_orders) {
    Report rep;
    rep.command = "positivity";
    rep.body = bundle_summary(bf);
    rep.body["positivity"] = json_positivity(positivity_report(a, jet_orders));
    return rep;
}

Report restrict_report(const BundleFile& bf, const BundleAnalysis& a) {
    Report rep;
    rep.command = "restrict";
    rep.body = bundle_summary(bf);
    rep.body["restrictions"] = ordered_json::array();
    for (const Wall& w : a.fan_walls) {
        rep.body["restrictions"].push_back(json_restriction(restrict_to_curve(a, w)));
    }
    return rep;
}

Report cohomology_character_report(const BundleFile& bf, const IntVec& u) {
    Report rep;
    rep.command = "cohomology";
    rep.body = bundle_summary(bf);
    rep.body["character"] = json_intvec(u);
    const std::vector<int> h = cohomology_at(bf.bundle, u);
    rep.body["h"] = ordered_json::array();
    for (int x : h) rep.body["h"].push_back(x);
    return rep;
}

Report euler_report(const BundleFile& bf) {
    Report rep;
    rep.command = "cohomology";
    rep.body = bundle_summary(bf);
    const LaurentPolynomial chi = euler_characteristic(bf.bundle);
    ordered_json terms = ordered_json::array();
    for (const auto& [exp, coef] : chi.terms()) {
        ordered_json tj;
        tj["exponent"] = json_intvec(exp);
        tj["coefficient"] = coef;
        terms.push_back(std::move(tj));
    }
    rep.body["euler_characteristic"] = chi.to_string();
    rep.body["terms"] = std::move(terms);
    return rep;
}

Report full_report(const BundleFile& bf, const BundleAnalysis& a) {
    Report rep;
    rep.command = "report";
    rep.body = bundle_summary(bf);
    rep.body["ground_set"] = json_ground(a);
    ordered_json lattice = ordered_json::array();
    for (const Subspace& m : a.lattice.members) {
        ordered_json mj;
        mj["dim"] = m.dim();
        mj["basis"] = json_span(m);
        lattice.push_back(std::move(mj));
    }
    rep.body["intersection_lattice"] = std::move(lattice);
    rep.body["polytopes"] = json_parliament(a);
    rep.body["cone_characters"] = json_characters(a);
    rep.body["splittings"] = json_splittings(a);
    rep.body["sections"] = json_sections(a.sections);
    rep.body["positivity"] = json_positivity(positivity_report(a, {0, 1, 2}));
    rep.body["restrictions"] = ordered_json::array();
    for (const Wall& w : a.fan_walls) {
        rep.body["restrictions"].push_back(json_restriction(restrict_to_curve(a, w)));
    }
    const LaurentPolynomial chi = euler_characteristic(a.bundle);
    rep.body["euler_characteristic"] = chi.to_string();
    return rep;
}

}  // namespace tvb
