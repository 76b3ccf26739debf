#include "holefill/mesh_io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "holefill/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "binary PLY writer emits raw little-endian bytes");

namespace holefill {

namespace {

std::string lower_ext(const std::string& path) {
    auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext;
}

void strip_cr(std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

double parse_double(const std::string& tok, long line, const char* what) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw ParseError(line, std::string("expected a number for ") + what + ", got '" + tok +
                                   "' at line " + std::to_string(line));
    }
    return v;
}

long parse_long(const std::string& tok, long line, const char* what) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0') {
        throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + tok +
                                   "' at line " + std::to_string(line));
    }
    return v;
}

// ---- OBJ ----

TriangleMesh read_obj(std::istream& in, const BuildOptions& opts) {
    std::vector<Vec3> vertices;
    std::vector<Face> faces;
    std::string raw;
    long line = 0;
    bool saw_content = false;

    while (std::getline(in, raw)) {
        ++line;
        strip_cr(raw);
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::string tag;
        if (!(ls >> tag)) continue;

        if (!saw_content && tag == "ply") {
            throw ParseError(line, "content looks like a PLY file, not OBJ");
        }
        saw_content = true;

        if (tag == "v") {
            std::string sx, sy, sz;
            if (!(ls >> sx >> sy >> sz)) {
                throw ParseError(line, "vertex record needs 3 coordinates at line " +
                                           std::to_string(line));
            }
            vertices.push_back({parse_double(sx, line, "x"), parse_double(sy, line, "y"),
                                parse_double(sz, line, "z")});
            // A 4th w component is legal; ignore it.
        } else if (tag == "f") {
            std::vector<int> poly;
            std::string tok;
            while (ls >> tok) {
                // "i", "i/t", "i//n", "i/t/n": the index is the part before '/'.
                std::string head = tok.substr(0, tok.find('/'));
                long idx = parse_long(head, line, "face index");
                if (idx < 0) idx += static_cast<long>(vertices.size());  // -1 = last vertex
                else --idx;                                              // 1-based
                if (idx < 0 || idx >= static_cast<long>(vertices.size())) {
                    throw ParseError(line, "face index " + head + " out of range at line " +
                                               std::to_string(line));
                }
                poly.push_back(static_cast<int>(idx));
            }
            if (poly.size() < 3) {
                throw ParseError(line, "face needs at least 3 indices at line " +
                                           std::to_string(line));
            }
            for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
                faces.push_back({poly[0], poly[k], poly[k + 1]});
            }
        }
        // vn/vt/g/o/s/usemtl/mtllib and anything else: skipped.
    }
    return TriangleMesh::build(std::move(vertices), std::move(faces), opts);
}

void write_obj(const TriangleMesh& mesh, std::ostream& out) {
    char buf[96];
    for (const Vec3& v : mesh.vertices) {
        std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
        out << buf;
    }
    for (const Face& f : mesh.faces) {
        out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
    }
    if (!out) throw IOError("failed while writing OBJ data");
}

// ---- PLY ----

enum class PlyType { I8, U8, I16, U16, I32, U32, F32, F64 };

PlyType ply_type_from(const std::string& name, long line) {
    if (name == "char" || name == "int8") return PlyType::I8;
    if (name == "uchar" || name == "uint8") return PlyType::U8;
    if (name == "short" || name == "int16") return PlyType::I16;
    if (name == "ushort" || name == "uint16") return PlyType::U16;
    if (name == "int" || name == "int32") return PlyType::I32;
    if (name == "uint" || name == "uint32") return PlyType::U32;
    if (name == "float" || name == "float32") return PlyType::F32;
    if (name == "double" || name == "float64") return PlyType::F64;
    throw ParseError(line, "unknown PLY type '" + name + "' at line " + std::to_string(line));
}

struct PlyProperty {
    std::string name;
    PlyType type = PlyType::F32;
    bool is_list = false;
    PlyType count_type = PlyType::U8;
};

struct PlyElement {
    std::string name;
    long count = 0;
    std::vector<PlyProperty> properties;
};

struct PlyHeader {
    bool binary = false;
    std::vector<PlyElement> elements;
    long end_line = 0;  // line number of end_header
};

PlyHeader read_ply_header(std::istream& in) {
    PlyHeader h;
    std::string raw;
    long line = 0;

    if (!std::getline(in, raw)) throw ParseError(1, "empty PLY stream");
    ++line;
    strip_cr(raw);
    if (raw != "ply") throw ParseError(1, "missing 'ply' magic on line 1");

    bool have_format = false;
    while (std::getline(in, raw)) {
        ++line;
        strip_cr(raw);
        std::istringstream ls(raw);
        std::string tag;
        if (!(ls >> tag)) continue;

        if (tag == "comment" || tag == "obj_info") continue;
        if (tag == "format") {
            std::string kind, version;
            ls >> kind >> version;
            if (kind == "ascii") h.binary = false;
            else if (kind == "binary_little_endian") h.binary = true;
            else {
                throw UnsupportedElement(line, "PLY format '" + kind +
                                                   "' is not supported at line " +
                                                   std::to_string(line));
            }
            have_format = true;
        } else if (tag == "element") {
            std::string name, count_tok;
            if (!(ls >> name >> count_tok)) {
                throw ParseError(line, "malformed element record at line " + std::to_string(line));
            }
            if (name != "vertex" && name != "face") {
                throw UnsupportedElement(line, "PLY element '" + name +
                                                   "' is not supported at line " +
                                                   std::to_string(line));
            }
            PlyElement e;
            e.name = name;
            e.count = parse_long(count_tok, line, "element count");
            if (e.count < 0) throw ParseError(line, "negative element count");
            h.elements.push_back(std::move(e));
        } else if (tag == "property") {
            if (h.elements.empty()) {
                throw ParseError(line, "property before any element at line " +
                                           std::to_string(line));
            }
            std::string t1;
            if (!(ls >> t1)) throw ParseError(line, "malformed property record");
            PlyProperty p;
            if (t1 == "list") {
                std::string ct, it, name;
                if (!(ls >> ct >> it >> name)) throw ParseError(line, "malformed list property");
                p.is_list = true;
                p.count_type = ply_type_from(ct, line);
                p.type = ply_type_from(it, line);
                p.name = name;
            } else {
                std::string name;
                if (!(ls >> name)) throw ParseError(line, "malformed property record");
                p.type = ply_type_from(t1, line);
                p.name = name;
            }
            h.elements.back().properties.push_back(std::move(p));
        } else if (tag == "end_header") {
            if (!have_format) throw ParseError(line, "end_header before format record");
            h.end_line = line;
            return h;
        } else {
            throw ParseError(line, "unknown header record '" + tag + "' at line " +
                                       std::to_string(line));
        }
    }
    throw ParseError(line, "PLY header missing end_header");
}

// Tokenizer for the ascii body; values may flow across lines. tok_line is the
// line the current token started on.
struct AsciiBody {
    std::istream& in;
    long line;
    long tok_line = 0;

    bool next(std::string& tok) {
        tok.clear();
        int c;
        while ((c = in.get()) != EOF) {
            if (c == '\n') { ++line; continue; }
            if (c == ' ' || c == '\t' || c == '\r') continue;
            break;
        }
        if (c == EOF) return false;
        tok_line = line;
        tok.push_back(static_cast<char>(c));
        while ((c = in.get()) != EOF) {
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                if (c == '\n') ++line;
                break;
            }
            tok.push_back(static_cast<char>(c));
        }
        return true;
    }

    double number(const char* what) {
        std::string tok;
        if (!next(tok)) {
            throw ParseError(line, std::string("unexpected end of data reading ") + what);
        }
        return parse_double(tok, tok_line, what);
    }
};

struct BinaryBody {
    std::istream& in;
    long offset;  // absolute byte offset, for error messages

    void read_raw(void* dst, int n) {
        in.read(static_cast<char*>(dst), n);
        if (in.gcount() != n) {
            throw ParseError(offset, "unexpected end of binary data at byte offset " +
                                         std::to_string(offset));
        }
        offset += n;
    }

    double value(PlyType t) {
        switch (t) {
            case PlyType::I8: { std::int8_t v; read_raw(&v, 1); return v; }
            case PlyType::U8: { std::uint8_t v; read_raw(&v, 1); return v; }
            case PlyType::I16: { std::int16_t v; read_raw(&v, 2); return v; }
            case PlyType::U16: { std::uint16_t v; read_raw(&v, 2); return v; }
            case PlyType::I32: { std::int32_t v; read_raw(&v, 4); return v; }
            case PlyType::U32: { std::uint32_t v; read_raw(&v, 4); return v; }
            case PlyType::F32: { float v; read_raw(&v, 4); return v; }
            case PlyType::F64: { double v; read_raw(&v, 8); return v; }
        }
        return 0;
    }
};

TriangleMesh read_ply(std::istream& in, const BuildOptions& opts) {
    PlyHeader h = read_ply_header(in);

    for (const PlyElement& e : h.elements) {
        for (const PlyProperty& p : e.properties) {
            bool used = (e.name == "vertex" && !p.is_list &&
                         (p.name == "x" || p.name == "y" || p.name == "z")) ||
                        (e.name == "face" && p.is_list &&
                         (p.name == "vertex_indices" || p.name == "vertex_index"));
            if (!used) {
                std::cerr << "mesh_io: skipping PLY property '" << p.name << "' of element '"
                          << e.name << "'\n";
            }
        }
    }

    std::vector<Vec3> vertices;
    std::vector<Face> faces;

    AsciiBody ascii{in, h.end_line + 1};
    BinaryBody binary{in, static_cast<long>(in.tellg())};

    for (const PlyElement& e : h.elements) {
        if (e.name == "vertex") {
            int ix = -1, iy = -1, iz = -1;
            for (std::size_t i = 0; i < e.properties.size(); ++i) {
                if (e.properties[i].is_list) continue;
                if (e.properties[i].name == "x") ix = static_cast<int>(i);
                if (e.properties[i].name == "y") iy = static_cast<int>(i);
                if (e.properties[i].name == "z") iz = static_cast<int>(i);
            }
            if (e.count > 0 && (ix < 0 || iy < 0 || iz < 0)) {
                throw ParseError(h.end_line, "vertex element lacks x/y/z properties");
            }
            vertices.reserve(vertices.size() + static_cast<std::size_t>(e.count));
            for (long n = 0; n < e.count; ++n) {
                Vec3 v;
                for (std::size_t i = 0; i < e.properties.size(); ++i) {
                    const PlyProperty& p = e.properties[i];
                    if (p.is_list) {
                        // Unused list property: consume and discard.
                        long cnt = static_cast<long>(h.binary ? binary.value(p.count_type)
                                                              : ascii.number("list count"));
                        for (long k = 0; k < cnt; ++k) {
                            h.binary ? binary.value(p.type) : ascii.number("list item");
                        }
                        continue;
                    }
                    double x = h.binary ? binary.value(p.type) : ascii.number(p.name.c_str());
                    if (static_cast<int>(i) == ix) v.x = x;
                    else if (static_cast<int>(i) == iy) v.y = x;
                    else if (static_cast<int>(i) == iz) v.z = x;
                }
                vertices.push_back(v);
            }
        } else {  // face
            int ilist = -1;
            for (std::size_t i = 0; i < e.properties.size(); ++i) {
                const PlyProperty& p = e.properties[i];
                if (p.is_list && (p.name == "vertex_indices" || p.name == "vertex_index")) {
                    ilist = static_cast<int>(i);
                }
            }
            if (e.count > 0 && ilist < 0) {
                throw ParseError(h.end_line, "face element lacks a vertex_indices list");
            }
            for (long n = 0; n < e.count; ++n) {
                std::vector<int> poly;
                for (std::size_t i = 0; i < e.properties.size(); ++i) {
                    const PlyProperty& p = e.properties[i];
                    // Error position: byte offset for binary, token line for ascii.
                    auto where = [&] { return h.binary ? binary.offset : ascii.tok_line; };
                    if (p.is_list) {
                        long cnt = static_cast<long>(h.binary ? binary.value(p.count_type)
                                                              : ascii.number("index count"));
                        if (static_cast<int>(i) == ilist) {
                            if (cnt < 3) {
                                throw ParseError(where(), "face needs at least 3 indices");
                            }
                            poly.reserve(static_cast<std::size_t>(cnt));
                        }
                        for (long k = 0; k < cnt; ++k) {
                            double x = h.binary ? binary.value(p.type)
                                                : ascii.number("vertex index");
                            if (static_cast<int>(i) != ilist) continue;
                            long idx = static_cast<long>(x);
                            if (idx < 0 || idx >= static_cast<long>(vertices.size())) {
                                throw ParseError(where(), "face index " + std::to_string(idx) +
                                                              " out of range");
                            }
                            poly.push_back(static_cast<int>(idx));
                        }
                    } else {
                        h.binary ? binary.value(p.type) : ascii.number(p.name.c_str());
                    }
                }
                for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
                    faces.push_back({poly[0], poly[k], poly[k + 1]});
                }
            }
        }
    }
    return TriangleMesh::build(std::move(vertices), std::move(faces), opts);
}

void write_ply(const TriangleMesh& mesh, std::ostream& out, bool binary) {
    out << "ply\n"
        << "format " << (binary ? "binary_little_endian" : "ascii") << " 1.0\n"
        << "element vertex " << mesh.vertex_count() << "\n"
        << "property double x\n"
        << "property double y\n"
        << "property double z\n"
        << "element face " << mesh.face_count() << "\n"
        << "property list uchar int vertex_indices\n"
        << "end_header\n";

    if (binary) {
        for (const Vec3& v : mesh.vertices) {
            double xyz[3] = {v.x, v.y, v.z};
            out.write(reinterpret_cast<const char*>(xyz), sizeof xyz);
        }
        for (const Face& f : mesh.faces) {
            std::uint8_t n = 3;
            std::int32_t idx[3] = {f[0], f[1], f[2]};
            out.write(reinterpret_cast<const char*>(&n), 1);
            out.write(reinterpret_cast<const char*>(idx), sizeof idx);
        }
    } else {
        char buf[96];
        for (const Vec3& v : mesh.vertices) {
            std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v.x, v.y, v.z);
            out << buf;
        }
        for (const Face& f : mesh.faces) {
            out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
        }
    }
    if (!out) throw IOError("failed while writing PLY data");
}

}  // namespace

MeshFileFormat detect_format(const std::string& path) {
    std::string ext = lower_ext(path);
    if (ext == "obj") return MeshFileFormat::Obj;
    if (ext == "ply") {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IOError("cannot open '" + path + "'");
        PlyHeader h = read_ply_header(in);
        return h.binary ? MeshFileFormat::PlyBinaryLE : MeshFileFormat::PlyAscii;
    }
    throw IOError("unsupported mesh extension on '" + path + "' (expect .obj or .ply)");
}

TriangleMesh read_mesh(std::istream& in, MeshFileFormat format, const BuildOptions& opts) {
    if (format == MeshFileFormat::Obj) return read_obj(in, opts);
    return read_ply(in, opts);  // ascii vs binary comes from the header itself
}

TriangleMesh read_mesh(const std::string& path, const BuildOptions& opts) {
    MeshFileFormat format = detect_format(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open '" + path + "'");
    return read_mesh(in, format, opts);
}

void write_mesh(const TriangleMesh& mesh, std::ostream& out, MeshFileFormat format) {
    switch (format) {
        case MeshFileFormat::Obj: write_obj(mesh, out); break;
        case MeshFileFormat::PlyAscii: write_ply(mesh, out, false); break;
        case MeshFileFormat::PlyBinaryLE: write_ply(mesh, out, true); break;
    }
}

void write_mesh(const TriangleMesh& mesh, const std::string& path, MeshFileFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot open '" + path + "' for writing");
    write_mesh(mesh, out, format);
    out.flush();
    if (!out) throw IOError("failed writing '" + path + "'");
}

}  // namespace holefill
