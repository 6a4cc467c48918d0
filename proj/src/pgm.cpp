#include "cfwb/pgm.hpp"

#include <cctype>
#include <fstream>

namespace cfwb {

namespace {

class HeaderScanner {
public:
    explicit HeaderScanner(std::span<const uint8_t> bytes) : bytes_(bytes) {}

    // Skips whitespace and '#' comment lines between header tokens.
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            uint8_t c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n')
                    ++pos_;
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    long next_int() {
        skip_separators();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_]))
            throw FormatError("PGM: expected integer header field");
        long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + (bytes_[pos_] - '0');
            if (v > 1'000'000'000)
                throw FormatError("PGM: header field out of range");
            ++pos_;
        }
        return v;
    }

    // Consumes the single whitespace byte separating maxval from the payload.
    void consume_payload_separator() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_]))
            throw FormatError("PGM: missing separator before pixel data");
        ++pos_;
    }

    size_t pos() const { return pos_; }

private:
    std::span<const uint8_t> bytes_;
    size_t pos_ = 0;
};

int bit_depth_for_maxval(long maxval) {
    int d = 0;
    while ((1L << d) - 1 < maxval)
        ++d;
    return d < 8 ? 8 : d;
}

} // namespace

CfaImage load_pgm(std::span<const uint8_t> bytes, CfaPhase phase) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
        throw FormatError("PGM: not a binary P5 file");
    HeaderScanner scan(bytes.subspan(2));
    const long width = scan.next_int();
    const long height = scan.next_int();
    const long maxval = scan.next_int();
    scan.consume_payload_separator();

    if (width <= 0 || height <= 0 || width > 1 << 20 || height > 1 << 20)
        throw FormatError("PGM: bad dimensions");
    if (maxval <= 0 || maxval > 65535)
        throw FormatError("PGM: maxval must be in [1, 65535]");

    const int bytes_per_sample = maxval > 255 ? 2 : 1;
    const size_t count = static_cast<size_t>(width) * static_cast<size_t>(height);
    const size_t payload_offset = 2 + scan.pos();
    if (bytes.size() - payload_offset < count * bytes_per_sample)
        throw FormatError("PGM: truncated pixel data");

    CfaImage img = CfaImage::make(static_cast<int>(width), static_cast<int>(height),
                                  bit_depth_for_maxval(maxval), phase);
    const uint8_t* p = bytes.data() + payload_offset;
    if (bytes_per_sample == 1) {
        for (size_t i = 0; i < count; ++i)
            img.samples[i] = p[i];
    } else {
        for (size_t i = 0; i < count; ++i)
            img.samples[i] = (p[2 * i] << 8) | p[2 * i + 1];
    }
    for (int32_t v : img.samples)
        if (v > maxval)
            throw FormatError("PGM: sample exceeds maxval");
    return img;
}

std::vector<uint8_t> save_pgm(const CfaImage& img) {
    validate_geometry(img);
    const int32_t maxval = img.maxval();
    for (int32_t v : img.samples)
        if (v < 0 || v > maxval)
            throw FormatError("PGM: sample outside [0, maxval]; cannot serialize");

    std::string header = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                         "\n" + std::to_string(maxval) + "\n";
    const int bytes_per_sample = maxval > 255 ? 2 : 1;
    std::vector<uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + img.samples.size() * bytes_per_sample);
    for (int32_t v : img.samples) {
        if (bytes_per_sample == 2)
            out.push_back(static_cast<uint8_t>(v >> 8));
        out.push_back(static_cast<uint8_t>(v & 0xff));
    }
    return out;
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open for reading: " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("read failed: " + path);
    return bytes;
}

void write_file(const std::string& path, std::span<const uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("write failed: " + path);
}

CfaImage load_pgm_file(const std::string& path, CfaPhase phase) {
    return load_pgm(read_file(path), phase);
}

void save_pgm_file(const std::string& path, const CfaImage& img) {
    write_file(path, save_pgm(img));
}

} // namespace cfwb
