#ifndef PLCAT_IO_HPP
#define PLCAT_IO_HPP

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "plcat/collapse.hpp"
#include "plcat/complex.hpp"
#include "plcat/enrichment.hpp"
#include "plcat/gadget.hpp"
#include "plcat/plgcat.hpp"
#include "plcat/shelling.hpp"
#include "plcat/subdivision.hpp"

namespace plcat::io {

// insertion-ordered so emitted artifacts are byte-stable
using json = nlohmann::ordered_json;

// ---- complex files ------------------------------------------------------
// Text format, one maximal face per line:
//   v <label> | e <label> <label> | t <label> <label> <label>
// '#' starts a comment, blank lines are ignored.
Complex2 complex_from_text(const std::string& text);
std::string complex_to_text(const Complex2& k);

struct NamedComplex {
    Complex2 complex;
    std::map<std::string, SubcomplexMask> named;  // named_subcomplexes entries
};

json complex_to_json(const Complex2& k,
                     const std::map<std::string, SubcomplexMask>& named = {});
NamedComplex complex_from_json(const json& j);

// Reads text or JSON (sniffed on the leading '{').
NamedComplex load_complex(const std::filesystem::path& path);

// ---- certificates & verdicts --------------------------------------------
json collapse_certificate_to_json(const Complex2& k, const CollapseCertificate& cert);
CollapseCertificate collapse_certificate_from_json(const Complex2& k, const json& j);

json subdivision_to_json(const SubdivisionMap& m);
json cover_certificate_to_json(const CoverCertificate& c);
CoverCertificate cover_certificate_from_json(const json& j);

json shelling_to_json(const Complex2& k, const std::vector<TriangleId>& order);
json hachimori_to_json(const Complex2& k, const HachimoriVerdict& v);
json plgcat_verdict_to_json(const PlgcatVerdict& v, const Complex2* queried = nullptr);
json gadget_report_to_json(const GadgetReport& r);

// ---- enriched complexes & gadgets ----------------------------------------
json complex_plus_to_json(const ComplexPlus& kp);
// Rebuilds handles from torus:/longitude: entries; annulus1:/annulus2: are
// used when present and re-derived otherwise.
ComplexPlus complex_plus_from_json(const json& j);

// Gadget file: complex JSON with contiguous sphere:1..n subcomplexes.
GadgetComplex gadget_from_json(const json& j);
GadgetComplex load_gadget(const std::filesystem::path& path);

// ---- files ---------------------------------------------------------------
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);
void write_json(const std::filesystem::path& path, const json& j);

}  // namespace plcat::io

#endif
