#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ca.hpp"
#include "doubling.hpp"

namespace blockca {

// Raster view of a diagram over an inclusive column range; 1-cells are black.
// t0_bottom puts row t=0 at the bottom of the image (the default orientation),
// t0_top puts it first.
struct RasterSpec {
    int64_t xmin, xmax;
    bool t0_bottom = true;
};

inline std::vector<std::string> diagram_raster(const Diagram& d, const RasterSpec& spec) {
    std::vector<std::string> rows;
    for (int64_t t = 0; t <= d.steps(); ++t) {
        std::string line;
        line.reserve(static_cast<size_t>(spec.xmax - spec.xmin + 1));
        for (int64_t x = spec.xmin; x <= spec.xmax; ++x)
            line.push_back(d.cell(x, t) ? '1' : '0');
        rows.push_back(std::move(line));
    }
    if (spec.t0_bottom) std::reverse(rows.begin(), rows.end());
    return rows;
}

// PBM P1 (ASCII): the diff-able golden format. Comments go right after the
// magic number, one "# key=value" line each.
inline void write_pbm_p1(std::ostream& os, const std::vector<std::string>& raster,
                         const std::vector<std::string>& comments) {
    os << "P1\n";
    for (const std::string& c : comments) os << "# " << c << "\n";
    size_t w = raster.empty() ? 0 : raster.front().size();
    os << w << " " << raster.size() << "\n";
    for (const std::string& row : raster) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ' ';
            os << row[i];
        }
        os << "\n";
    }
}

// PBM P4 (binary), for bulk output. Same pixels as P1, packed 8 per byte.
inline void write_pbm_p4(std::ostream& os, const std::vector<std::string>& raster,
                         const std::vector<std::string>& comments) {
    os << "P4\n";
    for (const std::string& c : comments) os << "# " << c << "\n";
    size_t w = raster.empty() ? 0 : raster.front().size();
    os << w << " " << raster.size() << "\n";
    for (const std::string& row : raster) {
        uint8_t byte = 0;
        int nbits = 0;
        for (char ch : row) {
            byte = static_cast<uint8_t>((byte << 1) | (ch == '1'));
            if (++nbits == 8) {
                os.put(static_cast<char>(byte));
                byte = 0;
                nbits = 0;
            }
        }
        if (nbits) os.put(static_cast<char>(byte << (8 - nbits)));
    }
}

struct Rgb {
    uint8_t r, g, b;
};

// Fixed layer palette for superposed images; index 0 is the background.
inline const std::array<Rgb, 7>& layer_palette() {
    static const std::array<Rgb, 7> p = {{{255, 255, 255},
                                          {255, 204, 0},
                                          {0, 102, 204},
                                          {204, 0, 0},
                                          {0, 153, 0},
                                          {153, 0, 153},
                                          {0, 153, 153}}};
    return p;
}

// PPM P3 (ASCII) with the fixed palette above.
inline void write_ppm_p3(std::ostream& os, const LayeredImage& img,
                         const std::vector<std::string>& comments) {
    os << "P3\n";
    for (const std::string& c : comments) os << "# " << c << "\n";
    os << img.width << " " << img.height << "\n255\n";
    const auto& pal = layer_palette();
    for (int64_t r = 0; r < img.height; ++r) {
        for (int64_t c = 0; c < img.width; ++c) {
            const Rgb& px = pal[img.pixels[static_cast<size_t>(r * img.width + c)] % pal.size()];
            if (c) os << ' ';
            os << int(px.r) << ' ' << int(px.g) << ' ' << int(px.b);
        }
        os << "\n";
    }
}

}  // namespace blockca
