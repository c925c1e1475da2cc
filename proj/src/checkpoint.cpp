#include "domcount/checkpoint.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace domcount {

namespace {

constexpr const char* kMagic = "DOMCOUNT-CHECKPOINT";

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw std::runtime_error("truncated checkpoint");
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) throw std::runtime_error("truncated checkpoint");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

void put_value(std::ostream& out, std::uint32_t v) { put_u32(out, v); }

void put_value(std::ostream& out, const BigInt& v) {
  const std::string s = v.str();
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void get_value(std::istream& in, std::uint32_t& v) { v = get_u32(in); }

void get_value(std::istream& in, BigInt& v) {
  const std::uint32_t len = get_u32(in);
  std::string s(len, '\0');
  if (!in.read(s.data(), len)) throw std::runtime_error("truncated checkpoint");
  v = BigInt(s);
}

template <class Value>
void write_impl(const std::filesystem::path& path, const CheckpointHeader& h, const ConfigurationList<Value>& list) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << kMagic << ' ' << h.version << ' ' << h.family << ' ' << h.m << ' ' << h.n << ' ' << h.row << ' '
        << h.stride << ' ' << h.ring << '\n';
    put_u64(out, list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      put_u64(out, list.code(i));
      auto w = list.weight(i);
      put_u32(out, static_cast<std::uint32_t>(w.size()));
      for (const auto& v : w) put_value(out, v);
    }
    if (!out) throw std::runtime_error("failed writing checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

template <class Value>
std::optional<Checkpoint<Value>> read_impl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string line;
  std::getline(in, line);
  std::istringstream hs(line);
  std::string magic;
  Checkpoint<Value> ck;
  auto& h = ck.header;
  hs >> magic >> h.version >> h.family >> h.m >> h.n >> h.row >> h.stride;
  if (!hs || magic != kMagic) throw std::runtime_error("malformed checkpoint header");
  std::getline(hs >> std::ws, h.ring);
  if (h.ring.empty()) throw std::runtime_error("malformed checkpoint header");
  const std::uint64_t count = get_u64(in);
  ck.list = ConfigurationList<Value>(h.stride);
  auto& codes = ck.list.mutable_codes();
  auto& values = ck.list.mutable_values();
  codes.reserve(count);
  values.resize(count * h.stride);
  for (std::uint64_t i = 0; i < count; ++i) {
    codes.push_back(get_u64(in));
    if (i > 0 && codes[i] <= codes[i - 1]) throw std::runtime_error("checkpoint codes not ascending");
    if (get_u32(in) != h.stride) throw std::runtime_error("checkpoint record width mismatch");
    for (std::size_t k = 0; k < h.stride; ++k) get_value(in, values[i * h.stride + k]);
  }
  return ck;
}

}  // namespace

void write_checkpoint(const std::filesystem::path& path, const CheckpointHeader& header,
                      const ConfigurationList<std::uint32_t>& list) {
  write_impl(path, header, list);
}

void write_checkpoint(const std::filesystem::path& path, const CheckpointHeader& header,
                      const ConfigurationList<BigInt>& list) {
  write_impl(path, header, list);
}

std::optional<Checkpoint<std::uint32_t>> read_checkpoint_mod(const std::filesystem::path& path) {
  return read_impl<std::uint32_t>(path);
}

std::optional<Checkpoint<BigInt>> read_checkpoint_exact(const std::filesystem::path& path) {
  return read_impl<BigInt>(path);
}

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, const CheckpointHeader& h) {
  std::string ring = h.ring;
  for (auto& ch : ring) {
    if (ch == ' ') ch = '_';
  }
  return dir / (h.family + "_m" + std::to_string(h.m) + "_n" + std::to_string(h.n) + "_s" +
                std::to_string(h.stride) + "_" + ring + ".ckpt");
}

}  // namespace domcount
