#include "bitplane_lab/image.hpp"

#include <png.h>

#include <csetjmp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>

#include "bitplane_lab/error.hpp"

namespace bpl {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height) {
  if (width == 0 || height == 0) {
    throw Error(Errc::InvalidParams, "image sides must be >= 1");
  }
  pixels_.assign(width * height, fill);
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) {
    throw Error(Errc::InvalidParams, "image sides must be >= 1");
  }
  if (pixels_.size() != width * height) {
    throw Error(Errc::DimensionMismatch,
                "pixel buffer holds " + std::to_string(pixels_.size()) + " values, expected " +
                    std::to_string(width * height));
  }
}

namespace {

constexpr std::uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};

// Header tokenizer for PNM: whitespace-separated decimal fields, '#' comments
// running to end of line.
class PgmHeaderReader {
 public:
  explicit PgmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t next_number(const char* what) {
    skip_space_and_comments();
    std::size_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > (std::size_t{1} << 32)) {
        throw Error(Errc::UnsupportedFormat, std::string("PGM ") + what + " out of range");
      }
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      throw Error(Errc::CorruptData, std::string("PGM header: expected ") + what);
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw Error(Errc::CorruptData, "PGM header: missing whitespace before raster");
    }
    return pos_ + 1;
  }

  void skip(std::size_t n) { pos_ += n; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(Errc::FileNotFound, path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::IoError, "cannot open " + path.string());
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct PngReadState {
  std::span<const std::uint8_t> bytes;
  std::size_t offset = 0;
  char message[256] = {};
};

void png_read_from_span(png_structp png, png_bytep out, png_size_t length) {
  auto* state = static_cast<PngReadState*>(png_get_io_ptr(png));
  if (state->offset + length > state->bytes.size()) {
    png_error(png, "truncated PNG stream");
  }
  std::memcpy(out, state->bytes.data() + state->offset, length);
  state->offset += length;
}

void png_record_error(png_structp png, png_const_charp message) {
  auto* state = static_cast<PngReadState*>(png_get_error_ptr(png));
  std::snprintf(state->message, sizeof state->message, "%s", message);
  png_longjmp(png, 1);
}

void png_ignore_warning(png_structp, png_const_charp) {}

enum class PngStatus { Ok, NotGray, BadDepth, Transparency, Corrupt, NoMemory };

struct PngHeader {
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int bit_depth = 0;
};

// Runs under setjmp: locals must be trivially destructible.
PngStatus decode_png_raw(PngReadState& state, PngHeader& header, std::vector<std::uint8_t>& pixels,
                         std::vector<png_bytep>& rows) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &state, png_record_error,
                                           png_ignore_warning);
  if (png == nullptr) return PngStatus::NoMemory;
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    return PngStatus::NoMemory;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return PngStatus::Corrupt;
  }
  png_set_read_fn(png, &state, png_read_from_span);
  png_read_info(png, info);

  header.width = png_get_image_width(png, info);
  header.height = png_get_image_height(png, info);
  header.bit_depth = png_get_bit_depth(png, info);
  PngStatus status = PngStatus::Ok;
  if (png_get_color_type(png, info) != PNG_COLOR_TYPE_GRAY) {
    status = PngStatus::NotGray;
  } else if (header.bit_depth != 8) {
    status = PngStatus::BadDepth;
  } else if (png_get_valid(png, info, PNG_INFO_tRNS)) {
    status = PngStatus::Transparency;
  }
  if (status == PngStatus::Ok) {
    pixels.resize(std::size_t{header.width} * header.height);
    rows.resize(header.height);
    for (std::size_t y = 0; y < header.height; ++y) {
      rows[y] = pixels.data() + y * header.width;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return status;
}

GrayImage decode_png(std::span<const std::uint8_t> bytes) {
  PngReadState state{bytes, 0, {}};
  PngHeader header;
  std::vector<std::uint8_t> pixels;
  std::vector<png_bytep> rows;
  switch (decode_png_raw(state, header, pixels, rows)) {
    case PngStatus::Ok:
      return GrayImage(header.width, header.height, std::move(pixels));
    case PngStatus::NotGray:
      throw Error(Errc::UnsupportedFormat, "PNG is not single-channel grayscale");
    case PngStatus::BadDepth:
      throw Error(Errc::UnsupportedFormat,
                  "PNG bit depth " + std::to_string(header.bit_depth) + " (only 8 is supported)");
    case PngStatus::Transparency:
      throw Error(Errc::UnsupportedFormat, "PNG carries transparency");
    case PngStatus::Corrupt:
      throw Error(Errc::CorruptData, std::string("PNG: ") + state.message);
    case PngStatus::NoMemory:
      break;
  }
  throw Error(Errc::IoError, "libpng allocation failed");
}

}  // namespace

GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(Errc::UnsupportedFormat, "not a binary PGM (P5)");
  }
  PgmHeaderReader header(bytes);
  header.skip(2);
  const std::size_t width = header.next_number("width");
  const std::size_t height = header.next_number("height");
  const std::size_t maxval = header.next_number("maxval");
  if (width == 0 || height == 0) {
    throw Error(Errc::UnsupportedFormat, "PGM with zero width or height");
  }
  if (maxval != 255) {
    throw Error(Errc::UnsupportedFormat, "PGM maxval " + std::to_string(maxval) + " (only 255)");
  }
  const std::size_t offset = header.raster_offset();
  const std::size_t count = width * height;
  if (bytes.size() - std::min(offset, bytes.size()) < count) {
    throw Error(Errc::CorruptData, "PGM raster truncated");
  }
  std::vector<std::uint8_t> pixels(bytes.begin() + static_cast<std::ptrdiff_t>(offset),
                                   bytes.begin() + static_cast<std::ptrdiff_t>(offset + count));
  return GrayImage(width, height, std::move(pixels));
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

GrayImage load_image(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  try {
    if (bytes.size() >= sizeof(kPngSignature) &&
        std::equal(std::begin(kPngSignature), std::end(kPngSignature), bytes.begin())) {
      return decode_png(bytes);
    }
    return decode_pgm(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.message());
  }
}

void save_image(const GrayImage& img, const std::filesystem::path& path) {
  if (img.empty()) {
    throw Error(Errc::InvalidParams, "cannot save an empty image");
  }
  const auto bytes = encode_pgm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(Errc::IoError, "cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(Errc::IoError, "write failed for " + path.string());
  }
}

}  // namespace bpl
