#include "plcat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "plcat/homology.hpp"

namespace plcat::io {

namespace {

json faces_to_json(const std::vector<std::vector<std::string>>& faces) {
    json out = json::array();
    for (const auto& f : faces) out.push_back(f);
    return out;
}

std::vector<std::vector<std::string>> faces_from_json(const json& j) {
    if (!j.is_array()) throw SyntaxError("face list must be an array");
    std::vector<std::vector<std::string>> faces;
    for (const auto& f : j) {
        if (!f.is_array()) throw SyntaxError("face must be an array of labels");
        std::vector<std::string> face;
        for (const auto& l : f) {
            if (!l.is_string()) throw SyntaxError("labels must be strings");
            face.push_back(l.get<std::string>());
        }
        faces.push_back(std::move(face));
    }
    return faces;
}

std::string face_key(const std::vector<std::string>& labels) {
    std::vector<std::string> s = labels;
    std::sort(s.begin(), s.end());
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += s[i];
    }
    return out;
}

}  // namespace

Complex2 complex_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::vector<std::string>> faces;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        std::vector<std::string> labels;
        std::string l;
        while (ls >> l) labels.push_back(l);
        std::size_t want = kind == "v" ? 1 : kind == "e" ? 2 : kind == "t" ? 3 : 0;
        if (want == 0) throw SyntaxError("unknown face kind '" + kind + "'", lineno);
        if (labels.size() != want)
            throw SyntaxError("face kind '" + kind + "' needs " + std::to_string(want) +
                                  " labels",
                              lineno);
        faces.push_back(std::move(labels));
    }
    return from_maximal_faces(faces);
}

std::string complex_to_text(const Complex2& k) {
    std::ostringstream out;
    for (const auto& f : k.maximal_faces()) {
        out << (f.size() == 1 ? "v" : f.size() == 2 ? "e" : "t");
        for (const auto& l : f) out << " " << l;
        out << "\n";
    }
    return out.str();
}

json complex_to_json(const Complex2& k, const std::map<std::string, SubcomplexMask>& named) {
    json j;
    j["maximal_faces"] = faces_to_json(k.maximal_faces());
    if (!named.empty()) {
        json sub = json::object();
        for (const auto& [name, mask] : named)
            sub[name] = faces_to_json(mask_maximal_faces(k, mask));
        j["named_subcomplexes"] = sub;
    }
    return j;
}

NamedComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("maximal_faces"))
        throw SyntaxError("complex JSON needs a maximal_faces field");
    NamedComplex out;
    out.complex = from_maximal_faces(faces_from_json(j.at("maximal_faces")));
    if (j.contains("named_subcomplexes")) {
        const json& sub = j.at("named_subcomplexes");
        if (!sub.is_object()) throw SyntaxError("named_subcomplexes must be an object");
        for (const auto& [name, faces] : sub.items())
            out.named.emplace(name, mask_from_faces(out.complex, faces_from_json(faces)));
    }
    return out;
}

NamedComplex load_complex(const std::filesystem::path& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = json::parse(text);
        return complex_from_json(j);
    }
    NamedComplex out;
    out.complex = complex_from_text(text);
    return out;
}

json collapse_certificate_to_json(const Complex2& k, const CollapseCertificate& cert) {
    json steps = json::array();
    for (const auto& s : cert.steps) {
        json step;
        step["free"] = k.face_labels({s.free_dim, s.free_id});
        step["coface"] = k.face_labels({s.free_dim + 1, s.coface_id});
        steps.push_back(step);
    }
    json j;
    j["type"] = "collapse_certificate";
    j["start_hash"] = cert.start_hash;
    j["steps"] = steps;
    j["residual"] = faces_to_json(mask_maximal_faces(k, cert.residual));
    return j;
}

CollapseCertificate collapse_certificate_from_json(const Complex2& k, const json& j) {
    CollapseCertificate cert;
    if (j.contains("start_hash")) cert.start_hash = j.at("start_hash").get<std::string>();
    if (!j.contains("steps") || !j.contains("residual"))
        throw SyntaxError("certificate needs steps and residual");
    for (const auto& step : j.at("steps")) {
        auto free_labels = step.at("free").get<std::vector<std::string>>();
        auto coface_labels = step.at("coface").get<std::vector<std::string>>();
        if (free_labels.empty() || coface_labels.size() != free_labels.size() + 1)
            throw SyntaxError("malformed step");
        CollapseStep s;
        s.free_dim = static_cast<int>(free_labels.size()) - 1;
        if (s.free_dim == 0) {
            s.free_id = k.vertex_id(free_labels[0]);
            s.coface_id = k.edge_id(k.vertex_id(coface_labels[0]), k.vertex_id(coface_labels[1]));
        } else if (s.free_dim == 1) {
            s.free_id = k.edge_id(k.vertex_id(free_labels[0]), k.vertex_id(free_labels[1]));
            s.coface_id = k.triangle_id(k.vertex_id(coface_labels[0]),
                                        k.vertex_id(coface_labels[1]),
                                        k.vertex_id(coface_labels[2]));
        } else {
            throw SyntaxError("free face must be a vertex or an edge");
        }
        if (s.free_id < 0 || s.coface_id < 0) throw SyntaxError("step references unknown simplices");
        cert.steps.push_back(s);
    }
    cert.residual = mask_from_faces(k, faces_from_json(j.at("residual")));
    return cert;
}

json subdivision_to_json(const SubdivisionMap& m) {
    json carrier = json::array();
    auto emit = [&](int dim, std::size_t count, const std::vector<SimplexRef>& table) {
        for (std::size_t i = 0; i < count; ++i) {
            json entry;
            entry["child"] = m.child->face_labels({dim, static_cast<int>(i)});
            entry["parent"] = m.parent->face_labels(table[i]);
            carrier.push_back(entry);
        }
    };
    emit(0, m.child->vertex_count(), m.vertex_carrier);
    emit(1, m.child->edge_count(), m.edge_carrier);
    emit(2, m.child->triangle_count(), m.triangle_carrier);

    json j;
    j["parent"] = complex_to_json(*m.parent);
    j["carrier"] = carrier;
    return j;
}

json cover_certificate_to_json(const CoverCertificate& c) {
    const Complex2& k = *c.complex;
    json j;
    j["type"] = "cover_certificate";
    j["complex"] = complex_to_json(k);
    j["complex_hash"] = k.content_hash();
    json pieces = json::array();
    for (const auto& [mask, cert] : {std::pair{&c.piece1, &c.cert1}, {&c.piece2, &c.cert2}}) {
        Subcomplex piece = restrict_to(k, *mask);
        json p;
        p["faces"] = faces_to_json(mask_maximal_faces(k, *mask));
        p["collapse"] = collapse_certificate_to_json(piece.complex, *cert);
        pieces.push_back(p);
    }
    j["pieces"] = pieces;
    if (c.subdivision) j["subdivision"] = subdivision_to_json(*c.subdivision);
    return j;
}

CoverCertificate cover_certificate_from_json(const json& j) {
    CoverCertificate c;
    c.complex = std::make_shared<Complex2>(
        complex_from_json(j.at("complex")).complex);
    if (!j.contains("pieces") || j.at("pieces").size() != 2)
        throw SyntaxError("cover certificate needs exactly 2 pieces");
    SubcomplexMask* masks[2] = {&c.piece1, &c.piece2};
    CollapseCertificate* certs[2] = {&c.cert1, &c.cert2};
    for (int i = 0; i < 2; ++i) {
        const json& p = j.at("pieces").at(i);
        *masks[i] = mask_from_faces(*c.complex, faces_from_json(p.at("faces")));
        Subcomplex piece = restrict_to(*c.complex, *masks[i]);
        *certs[i] = collapse_certificate_from_json(piece.complex, p.at("collapse"));
    }
    return c;
}

json shelling_to_json(const Complex2& k, const std::vector<TriangleId>& order) {
    json arr = json::array();
    for (TriangleId t : order) arr.push_back(k.face_labels({2, t}));
    json j;
    j["type"] = "shelling";
    j["shellable"] = true;
    j["order"] = arr;
    return j;
}

json hachimori_to_json(const Complex2& k, const HachimoriVerdict& v) {
    json j;
    j["type"] = "hachimori";
    switch (v.kind) {
        case HachimoriVerdict::Kind::yes: j["verdict"] = "yes"; break;
        case HachimoriVerdict::Kind::no: j["verdict"] = "no"; break;
        case HachimoriVerdict::Kind::unknown: j["verdict"] = "unknown"; break;
    }
    j["chi_tilde"] = v.chi;
    if (v.kind == HachimoriVerdict::Kind::yes) {
        json w = json::array();
        for (TriangleId t : v.witness) w.push_back(k.face_labels({2, t}));
        j["witness"] = w;
    }
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.disconnected_vertex >= 0) j["vertex"] = k.labels[v.disconnected_vertex];
    j["examined"] = v.examined;
    return j;
}

json plgcat_verdict_to_json(const PlgcatVerdict& v, const Complex2* queried) {
    json j;
    j["type"] = "plgcat_verdict";
    j["lower"] = v.lower;
    j["upper"] = v.upper;
    j["kind"] = v.kind;
    j["reason"] = v.reason;
    j["candidates"] = v.candidates;
    if (v.collapse && queried)
        j["collapse_certificate"] = collapse_certificate_to_json(*queried, *v.collapse);
    if (v.cover) j["certificate"] = cover_certificate_to_json(*v.cover);
    return j;
}

json gadget_report_to_json(const GadgetReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(e);
    }
    json j;
    j["type"] = "gadget_report";
    j["pass"] = r.all_pass();
    j["checks"] = checks;
    return j;
}

json complex_plus_to_json(const ComplexPlus& kp) {
    const Complex2& plus = *kp.complex;
    std::map<std::string, SubcomplexMask> named;
    for (const auto& h : kp.tori) {
        std::string tau = face_key(plus.face_labels({2, h.base_triangle}));
        named["torus:" + tau] = h.torus;
        named["longitude:" + tau] = h.longitude;
        named["annulus1:" + tau] = h.annulus1;
        named["annulus2:" + tau] = h.annulus2;
    }
    return complex_to_json(plus, named);
}

namespace {

// Re-derive the annulus split of a torus from its longitude: find the
// parallel 3-circle among interior vertices so that the band between the two
// circles is an annulus and the complement band is one as well.
std::pair<SubcomplexMask, SubcomplexMask> derive_annuli(const Complex2& plus,
                                                        const SubcomplexMask& torus,
                                                        const SubcomplexMask& longitude) {
    std::vector<VertexId> interior;
    for (int v : torus.vertices.ones())
        if (!longitude.vertices.test(v)) interior.push_back(v);
    if (interior.size() != 6) throw SyntaxError("torus does not have 6 interior vertices");

    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) {
                Bitset band(plus.vertex_count());
                for (int x : longitude.vertices.ones()) band.set(x);
                band.set(interior[a]);
                band.set(interior[b]);
                band.set(interior[c]);

                SubcomplexMask a1 = empty_mask(plus);
                for (int t : torus.triangles.ones()) {
                    const auto& tri = plus.triangles[t];
                    if (band.test(tri[0]) && band.test(tri[1]) && band.test(tri[2]))
                        a1.triangles.set(t);
                }
                if (a1.triangles.count() != 6) continue;
                a1 = mask_closure(plus, a1);
                SubcomplexMask a2 = empty_mask(plus);
                a2.triangles = mask_difference(torus, a1).triangles;
                a2 = mask_closure(plus, a2);
                if (mask_union(a1, a2) != torus) continue;
                if (!longitude.is_subset_of(a1) || !longitude.is_subset_of(a2)) continue;
                Subcomplex s1 = restrict_to(plus, a1);
                Subcomplex s2 = restrict_to(plus, a2);
                if (!(betti(s1.complex) == Betti{1, 1, 0})) continue;
                if (!(betti(s2.complex) == Betti{1, 1, 0})) continue;
                if (!collapses_to(s1.complex, s1.to_child(longitude))) continue;
                if (!collapses_to(s2.complex, s2.to_child(longitude))) continue;
                return {a1, a2};
            }
    throw SyntaxError("no annulus split found for a torus entry");
}

}  // namespace

ComplexPlus complex_plus_from_json(const json& j) {
    NamedComplex nc = complex_from_json(j);
    ComplexPlus kp;
    kp.complex = std::make_shared<Complex2>(std::move(nc.complex));
    const Complex2& plus = *kp.complex;

    std::vector<std::string> torus_keys;
    for (const auto& [name, mask] : nc.named)
        if (name.rfind("torus:", 0) == 0) torus_keys.push_back(name.substr(6));
    std::sort(torus_keys.begin(), torus_keys.end());
    if (torus_keys.empty()) throw NotEnrichedError("no torus entries in named_subcomplexes");

    kp.base = full_mask(plus);
    std::vector<TorusHandles> handles;
    for (const auto& key : torus_keys) {
        TorusHandles h;
        h.torus = nc.named.at("torus:" + key);
        auto lit = nc.named.find("longitude:" + key);
        if (lit == nc.named.end())
            throw SyntaxError("torus entry without matching longitude: " + key);
        h.longitude = lit->second;
        if (h.longitude.vertices.count() != 3 || h.longitude.edges.count() != 3)
            throw SyntaxError("longitude must be a 3-cycle: " + key);
        auto verts = h.longitude.vertices.ones();
        h.base_triangle = plus.triangle_id(verts[0], verts[1], verts[2]);
        if (h.base_triangle < 0)
            throw SyntaxError("longitude of " + key + " does not bound a base triangle");
        auto a1 = nc.named.find("annulus1:" + key);
        auto a2 = nc.named.find("annulus2:" + key);
        if (a1 != nc.named.end() && a2 != nc.named.end()) {
            h.annulus1 = a1->second;
            h.annulus2 = a2->second;
        } else {
            std::tie(h.annulus1, h.annulus2) = derive_annuli(plus, h.torus, h.longitude);
        }
        kp.base = mask_difference(kp.base, mask_difference(h.torus, h.longitude));
        handles.push_back(std::move(h));
    }
    std::sort(handles.begin(), handles.end(),
              [](const TorusHandles& a, const TorusHandles& b) {
                  return a.base_triangle < b.base_triangle;
              });
    kp.tori = std::move(handles);
    validate_complex_plus(kp);
    return kp;
}

GadgetComplex gadget_from_json(const json& j) {
    NamedComplex nc = complex_from_json(j);
    GadgetComplex g;
    g.complex = std::move(nc.complex);
    g.provenance = "external gadget file";
    for (std::size_t i = 1;; ++i) {
        auto it = nc.named.find("sphere:" + std::to_string(i));
        if (it == nc.named.end()) break;
        g.spheres.push_back(it->second);
    }
    std::size_t sphere_keys = 0;
    for (const auto& [name, mask] : nc.named)
        if (name.rfind("sphere:", 0) == 0) ++sphere_keys;
    if (sphere_keys != g.spheres.size())
        throw SyntaxError("sphere entries must be numbered contiguously from 1");
    return g;
}

GadgetComplex load_gadget(const std::filesystem::path& path) {
    json j = json::parse(read_file(path));
    return gadget_from_json(j);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    out << content;
}

void write_json(const std::filesystem::path& path, const json& j) {
    write_file(path, j.dump(2) + "\n");
}

}  // namespace plcat::io
