#include "wishart/polsar_io.hpp"
#include "wishart/errors.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

namespace wishart {

namespace {

constexpr std::uint16_t kFormatVersion = 1;

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>(v >> 8));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

class Reader {
public:
  Reader(const std::filesystem::path& path, std::string data)
      : path_(path.string()), data_(std::move(data)) {}

  std::uint8_t u8() {
    need(1);
    const std::uint8_t v = bytes()[0];
    pos_ += 1;
    return v;
  }
  std::uint16_t u16() {
    need(2);
    const auto* p = bytes();
    std::uint16_t v = static_cast<std::uint16_t>(p[0] | (p[1] << 8));
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4);
    const auto* p = bytes();
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
    pos_ += 4;
    return v;
  }
  double f64() {
    need(8);
    const auto* p = bytes();
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | p[i];
    pos_ += 8;
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  void expect_magic(const char* magic) {
    need(4);
    if (std::memcmp(data_.data() + pos_, magic, 4) != 0)
      throw io_error(path_ + ": magic mismatch; not a " + magic + std::string(" file"));
    pos_ += 4;
  }
  void expect_exhausted() {
    if (pos_ != data_.size())
      throw io_error(path_ + ": malformed payload; " +
                     std::to_string(data_.size() - pos_) + " trailing bytes");
  }

private:
  const unsigned char* bytes() const {
    return reinterpret_cast<const unsigned char*>(data_.data()) + pos_;
  }
  void need(std::size_t n) {
    if (pos_ + n > data_.size())
      throw io_error(path_ + ": truncated payload");
  }
  std::string path_;
  std::string data_;
  std::size_t pos_ = 0;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path.string() + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void spit(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error(path.string() + ": cannot open for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw io_error(path.string() + ": write failed");
}

} // namespace

const HermitianMatrix& CovarianceStack::at(int row, int col) const {
  if (row < 0 || row >= rows || col < 0 || col >= cols)
    throw domain_error("CovarianceStack: pixel index out of bounds");
  return pixels[static_cast<std::size_t>(row) * cols + col];
}

void write_stack(const CovarianceStack& stack, const std::filesystem::path& path) {
  if (stack.m < 1 || stack.rows < 1 || stack.cols < 1 ||
      stack.pixels.size() != static_cast<std::size_t>(stack.rows) * stack.cols)
    throw domain_error("write_stack: inconsistent stack dimensions");
  std::string out;
  out.reserve(16 + stack.pixels.size() * static_cast<std::size_t>(stack.m) * stack.m * 8);
  out.append("PCSK");
  put_u16(out, kFormatVersion);
  put_u16(out, static_cast<std::uint16_t>(stack.m));
  put_u32(out, static_cast<std::uint32_t>(stack.rows));
  put_u32(out, static_cast<std::uint32_t>(stack.cols));
  for (const auto& z : stack.pixels) {
    if (z.dim() != stack.m)
      throw dimension_mismatch_error("write_stack: pixel dimension differs from header");
    for (int i = 0; i < stack.m; ++i) put_f64(out, z(i, i).real());
    for (int i = 0; i < stack.m; ++i)
      for (int j = i + 1; j < stack.m; ++j) {
        put_f64(out, z(i, j).real());
        put_f64(out, z(i, j).imag());
      }
  }
  spit(path, out);
}

CovarianceStack read_stack(const std::filesystem::path& path) {
  Reader r(path, slurp(path));
  r.expect_magic("PCSK");
  const std::uint16_t version = r.u16();
  if (version != kFormatVersion)
    throw io_error(path.string() + ": unsupported PCSK version " + std::to_string(version));
  CovarianceStack stack;
  stack.m = r.u16();
  stack.rows = static_cast<int>(r.u32());
  stack.cols = static_cast<int>(r.u32());
  if (stack.m < 1 || stack.rows < 1 || stack.cols < 1)
    throw io_error(path.string() + ": malformed header dimensions");
  const std::size_t count = static_cast<std::size_t>(stack.rows) * stack.cols;
  const int n_upper = stack.m * (stack.m - 1) / 2;
  stack.pixels.reserve(count);
  std::vector<double> diag(static_cast<std::size_t>(stack.m));
  std::vector<Complex> upper(static_cast<std::size_t>(n_upper));
  for (std::size_t k = 0; k < count; ++k) {
    for (auto& d : diag) d = r.f64();
    for (auto& u : upper) {
      const double re = r.f64();
      const double im = r.f64();
      u = Complex(re, im);
    }
    stack.pixels.push_back(HermitianMatrix::from_upper(stack.m, diag, upper));
  }
  r.expect_exhausted();
  return stack;
}

CovarianceStack read_stack_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error(path.string() + ": cannot open for reading");
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  };
  auto split = [&](const std::string& s) {
    std::vector<double> fields;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        fields.push_back(std::stod(tok, &used));
      } catch (const std::exception&) {
        throw io_error(path.string() + ": unparseable field '" + tok + "'");
      }
    }
    return fields;
  };

  if (!next_line()) throw io_error(path.string() + ": missing m,rows,cols header");
  const auto header = split(line);
  if (header.size() != 3)
    throw io_error(path.string() + ": header must be 'm,rows,cols'");
  CovarianceStack stack;
  stack.m = static_cast<int>(header[0]);
  stack.rows = static_cast<int>(header[1]);
  stack.cols = static_cast<int>(header[2]);
  if (stack.m < 1 || stack.rows < 1 || stack.cols < 1)
    throw io_error(path.string() + ": malformed header dimensions");
  const std::size_t fields_per_pixel =
      static_cast<std::size_t>(stack.m) + static_cast<std::size_t>(stack.m) * (stack.m - 1);
  const std::size_t count = static_cast<std::size_t>(stack.rows) * stack.cols;
  for (std::size_t k = 0; k < count; ++k) {
    if (!next_line())
      throw io_error(path.string() + ": truncated payload; expected " +
                     std::to_string(count) + " pixels");
    const auto fields = split(line);
    if (fields.size() != fields_per_pixel)
      throw io_error(path.string() + ": pixel line has " + std::to_string(fields.size()) +
                     " fields, expected " + std::to_string(fields_per_pixel));
    std::vector<double> diag(fields.begin(), fields.begin() + stack.m);
    std::vector<Complex> upper;
    for (std::size_t i = static_cast<std::size_t>(stack.m); i < fields.size(); i += 2)
      upper.emplace_back(fields[i], fields[i + 1]);
    stack.pixels.push_back(HermitianMatrix::from_upper(stack.m, diag, upper));
  }
  return stack;
}

void write_mask(const MaskRegion& mask, const std::filesystem::path& path) {
  if (mask.rows < 1 || mask.cols < 1 ||
      mask.select.size() != static_cast<std::size_t>(mask.rows) * mask.cols)
    throw domain_error("write_mask: inconsistent mask dimensions");
  std::string out;
  out.append("PMSK");
  put_u16(out, kFormatVersion);
  put_u16(out, 0);
  put_u32(out, static_cast<std::uint32_t>(mask.rows));
  put_u32(out, static_cast<std::uint32_t>(mask.cols));
  out.append(reinterpret_cast<const char*>(mask.select.data()), mask.select.size());
  spit(path, out);
}

MaskRegion read_mask(const std::filesystem::path& path) {
  Reader r(path, slurp(path));
  r.expect_magic("PMSK");
  const std::uint16_t version = r.u16();
  if (version != kFormatVersion)
    throw io_error(path.string() + ": unsupported PMSK version " + std::to_string(version));
  r.u16(); // reserved
  MaskRegion mask;
  mask.rows = static_cast<int>(r.u32());
  mask.cols = static_cast<int>(r.u32());
  if (mask.rows < 1 || mask.cols < 1)
    throw io_error(path.string() + ": malformed header dimensions");
  mask.select.resize(static_cast<std::size_t>(mask.rows) * mask.cols);
  for (auto& b : mask.select) b = r.u8();
  r.expect_exhausted();
  return mask;
}

SampleSet extract_region(const CovarianceStack& stack, const RegionSpec& spec) {
  SampleSet out;
  if (const auto* rect = std::get_if<RectRegion>(&spec)) {
    if (rect->x0 < 0 || rect->y0 < 0 || rect->x1 < rect->x0 || rect->y1 < rect->y0 ||
        rect->x1 >= stack.cols || rect->y1 >= stack.rows)
      throw domain_error("extract_region: rectangle out of image bounds");
    for (int y = rect->y0; y <= rect->y1; ++y)
      for (int x = rect->x0; x <= rect->x1; ++x) out.add(stack.at(y, x));
  } else {
    const auto& mask = std::get<MaskRegion>(spec);
    if (mask.rows != stack.rows || mask.cols != stack.cols)
      throw dimension_mismatch_error("extract_region: mask dimensions differ from stack");
    for (int y = 0; y < stack.rows; ++y)
      for (int x = 0; x < stack.cols; ++x)
        if (mask.select[static_cast<std::size_t>(y) * mask.cols + x] != 0)
          out.add(stack.at(y, x));
    if (out.empty()) throw domain_error("extract_region: mask selects no pixels");
  }
  return out;
}

SampleSet subsample_without_replacement(const SampleSet& sample, long n,
                                        RngStream& stream) {
  const long total = static_cast<long>(sample.size());
  if (n < 1 || n > total)
    throw domain_error("subsample_without_replacement: need 1 <= n <= N");
  std::vector<std::size_t> idx(static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  // Partial Fisher-Yates; rejection sampling keeps the index choice unbiased.
  auto bounded = [&](std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = stream.next_u64();
      if (r >= threshold) return r % bound;
    }
  };
  SampleSet out;
  for (long i = 0; i < n; ++i) {
    const std::uint64_t j = i + bounded(static_cast<std::uint64_t>(total - i));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    out.add(sample[idx[static_cast<std::size_t>(i)]]);
  }
  return out;
}

} // namespace wishart
