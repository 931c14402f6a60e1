#include "uwu/plane_io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace uwu {

namespace {

constexpr int kMaxSide = 16384;

std::uint64_t byteswap64(std::uint64_t v) {
    v = ((v & 0x00FF00FF00FF00FFULL) << 8) | ((v & 0xFF00FF00FF00FF00ULL) >> 8);
    v = ((v & 0x0000FFFF0000FFFFULL) << 16) | ((v & 0xFFFF0000FFFF0000ULL) >> 16);
    return (v << 32) | (v >> 32);
}

int next_pgm_token(std::istream& in) {
    // Skips whitespace and '#' comment lines.
    while (true) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
            continue;
        }
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        break;
    }
    int value = -1;
    in >> value;
    if (!in) throw std::runtime_error("pgm: malformed header or samples");
    return value;
}

}  // namespace

Plane read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open image: " + path.string());
    std::string magic;
    in >> magic;
    if (magic != "P2") throw std::runtime_error("pgm: expected plain (P2) graymap");
    const int width = next_pgm_token(in);
    const int height = next_pgm_token(in);
    const int maxval = next_pgm_token(in);
    if (width < 1 || height < 1) throw std::runtime_error("pgm: dimension 0");
    if (width > kMaxSide || height > kMaxSide) throw std::runtime_error("pgm: oversized image");
    if (maxval < 1 || maxval > 65535) throw std::runtime_error("pgm: bad maxval");
    Plane p(height, width);
    for (size_t i = 0; i < p.size(); ++i) {
        const int v = next_pgm_token(in);
        if (v < 0 || v > maxval) throw std::runtime_error("pgm: sample out of range");
        p.data[i] = static_cast<double>(v) / static_cast<double>(maxval);
    }
    return p;
}

void write_plane_raw(const std::filesystem::path& path, const Plane& plane) {
    std::string bytes(plane.size() * 8, '\0');
    for (size_t i = 0; i < plane.size(); ++i) {
        std::uint64_t u;
        std::memcpy(&u, &plane.data[i], 8);
        if constexpr (std::endian::native == std::endian::big) u = byteswap64(u);
        std::memcpy(bytes.data() + i * 8, &u, 8);
    }
    write_file_atomic(path, bytes);

    nlohmann::json sidecar;
    sidecar["height"] = plane.height;
    sidecar["width"] = plane.width;
    std::filesystem::path sp = path;
    sp += ".json";
    write_file_atomic(sp, sidecar.dump(2) + "\n");
}

Plane read_plane_raw(const std::filesystem::path& path) {
    std::filesystem::path sp = path;
    sp += ".json";
    std::ifstream sj(sp);
    if (!sj) throw std::runtime_error("cannot open plane manifest: " + sp.string());
    nlohmann::json sidecar = nlohmann::json::parse(sj);
    const int height = sidecar.at("height").get<int>();
    const int width = sidecar.at("width").get<int>();
    if (height < 1 || width < 1 || height > kMaxSide || width > kMaxSide)
        throw std::runtime_error("plane manifest: bad dimensions");

    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open plane: " + path.string());
    Plane p(height, width);
    std::string bytes(p.size() * 8, '\0');
    in.read(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (in.gcount() != static_cast<std::streamsize>(bytes.size()))
        throw std::runtime_error("plane: truncated file");
    for (size_t i = 0; i < p.size(); ++i) {
        std::uint64_t u;
        std::memcpy(&u, bytes.data() + i * 8, 8);
        if constexpr (std::endian::native == std::endian::big) u = byteswap64(u);
        std::memcpy(&p.data[i], &u, 8);
    }
    return p;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write: " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("short write: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace uwu
