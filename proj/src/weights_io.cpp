#include "sentiline/weights_io.hpp"

#include <cstdint>
#include <cstring>
#include <map>
#include <set>
#include <vector>

#include "sentiline/error.hpp"

namespace sentiline {

namespace {

void put_u16(std::ostream& out, std::uint16_t v) {
    unsigned char b[2] = {static_cast<unsigned char>(v & 0xFF),
                          static_cast<unsigned char>(v >> 8)};
    out.write(reinterpret_cast<const char*>(b), 2);
}

void put_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_f32(std::ostream& out, float f) {
    std::uint32_t bits;
    std::memcpy(&bits, &f, 4);
    put_u32(out, bits);
}

std::uint16_t get_u16(std::istream& in) {
    unsigned char b[2];
    if (!in.read(reinterpret_cast<char*>(b), 2))
        throw Error::input("weights: unexpected end of file");
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw Error::input("weights: unexpected end of file");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

struct RawTensor {
    std::vector<std::uint32_t> dims;
    std::vector<float> data;
};

void write_tensor(std::ostream& out, const std::string& name,
                  const std::vector<std::uint32_t>& dims, const double* data) {
    put_u16(out, static_cast<std::uint16_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
    out.put(static_cast<char>(dims.size()));
    std::size_t count = 1;
    for (std::uint32_t d : dims) {
        put_u32(out, d);
        count *= d;
    }
    for (std::size_t i = 0; i < count; ++i) put_f32(out, static_cast<float>(data[i]));
}

std::map<std::string, RawTensor> read_container(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, "MLSW", 4) != 0) {
        throw Error::input("weights: bad magic (expected MLSW)");
    }
    const std::uint32_t version = get_u32(in);
    if (version != 1) {
        throw Error::input("weights: unsupported version " + std::to_string(version));
    }
    const std::uint32_t count = get_u32(in);
    std::map<std::string, RawTensor> tensors;
    for (std::uint32_t ti = 0; ti < count; ++ti) {
        const std::uint16_t name_len = get_u16(in);
        std::string name(name_len, '\0');
        if (!in.read(name.data(), name_len))
            throw Error::input("weights: unexpected end of tensor name");
        int rank = in.get();
        if (rank == EOF) throw Error::input("weights: unexpected end of file");
        RawTensor t;
        std::size_t n = 1;
        for (int r = 0; r < rank; ++r) {
            const std::uint32_t d = get_u32(in);
            t.dims.push_back(d);
            n *= d;
        }
        t.data.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t bits = [&]() -> std::uint32_t {
                unsigned char b[4];
                if (!in.read(reinterpret_cast<char*>(b), 4))
                    throw Error::input("weights: unexpected end of tensor data in " + name);
                std::uint32_t v = 0;
                for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(b[k]) << (8 * k);
                return v;
            }();
            float f;
            std::memcpy(&f, &bits, 4);
            t.data[i] = f;
        }
        if (tensors.count(name)) throw Error::input("weights: duplicate tensor " + name);
        tensors.emplace(std::move(name), std::move(t));
    }
    return tensors;
}

const RawTensor& need(const std::map<std::string, RawTensor>& tensors, const std::string& name) {
    auto it = tensors.find(name);
    if (it == tensors.end()) throw Error::input("weights: missing tensor " + name);
    return it->second;
}

void check_dims(const RawTensor& t, const std::vector<std::uint32_t>& want,
                const std::string& name) {
    if (t.dims != want) {
        std::string msg = "weights: tensor " + name + " has shape [";
        for (std::size_t i = 0; i < t.dims.size(); ++i)
            msg += (i ? "," : "") + std::to_string(t.dims[i]);
        msg += "], expected [";
        for (std::size_t i = 0; i < want.size(); ++i)
            msg += (i ? "," : "") + std::to_string(want[i]);
        msg += "]";
        throw Error::input(msg);
    }
}

std::string dir_prefix(int layer, bool fwd) {
    return "l" + std::to_string(layer + 1) + (fwd ? ".fwd." : ".bwd.");
}

void copy_in(Vec& dst, const RawTensor& src) {
    dst.resize(src.data.size());
    for (std::size_t i = 0; i < src.data.size(); ++i) dst[i] = src.data[i];
}

void load_dir(const std::map<std::string, RawTensor>& tensors, int layer, bool fwd,
              LstmDirWeights& w, std::uint32_t hidden4, std::uint32_t input_dim,
              std::uint32_t hidden) {
    const std::string p = dir_prefix(layer, fwd);
    const RawTensor& w_ih = need(tensors, p + "W_ih");
    check_dims(w_ih, {hidden4, input_dim}, p + "W_ih");
    const RawTensor& w_hh = need(tensors, p + "W_hh");
    check_dims(w_hh, {hidden4, hidden}, p + "W_hh");
    const RawTensor& b = need(tensors, p + "b");
    check_dims(b, {hidden4}, p + "b");
    w.w_ih = Mat(static_cast<int>(hidden4), static_cast<int>(input_dim));
    for (std::size_t i = 0; i < w_ih.data.size(); ++i) w.w_ih.a[i] = w_ih.data[i];
    w.w_hh = Mat(static_cast<int>(hidden4), static_cast<int>(hidden));
    for (std::size_t i = 0; i < w_hh.data.size(); ++i) w.w_hh.a[i] = w_hh.data[i];
    copy_in(w.b, b);
}

} // namespace

void save_weights(const SentimentModel& model, std::ostream& out) {
    const ModelConfig& cfg = model.cfg;
    const std::uint32_t h4 = static_cast<std::uint32_t>(4 * cfg.hidden_dim);
    const std::uint32_t h = static_cast<std::uint32_t>(cfg.hidden_dim);

    std::uint32_t count = static_cast<std::uint32_t>(cfg.layers * cfg.directions() * 3 + 2);
    out.write("MLSW", 4);
    put_u32(out, 1);
    put_u32(out, count);
    for (int l = 0; l < cfg.layers; ++l) {
        const std::uint32_t in_dim = static_cast<std::uint32_t>(cfg.input_width(l));
        for (int d = 0; d < cfg.directions(); ++d) {
            const LstmDirWeights& w = d == 0 ? model.layers[l].fwd : model.layers[l].bwd;
            const std::string p = dir_prefix(l, d == 0);
            write_tensor(out, p + "W_ih", {h4, in_dim}, w.w_ih.a.data());
            write_tensor(out, p + "W_hh", {h4, h}, w.w_hh.a.data());
            write_tensor(out, p + "b", {h4}, w.b.data());
        }
    }
    write_tensor(out, "head.W", {static_cast<std::uint32_t>(cfg.out_width())},
                 model.head_w.data());
    write_tensor(out, "head.b", {1}, &model.head_b);
}

SentimentModel load_weights(std::istream& in) {
    auto tensors = read_container(in);

    // Infer the configuration from tensor names and shapes.
    const RawTensor& l1 = need(tensors, "l1.fwd.W_ih");
    if (l1.dims.size() != 2) throw Error::input("weights: tensor l1.fwd.W_ih must be rank 2");
    const std::uint32_t h4 = l1.dims[0];
    if (h4 % 4 != 0) throw Error::input("weights: l1.fwd.W_ih rows must be a multiple of 4");
    ModelConfig cfg;
    cfg.hidden_dim = static_cast<int>(h4 / 4);
    cfg.embed_dim = static_cast<int>(l1.dims[1]);
    cfg.bidirectional = tensors.count("l1.bwd.W_ih") > 0;
    cfg.layers = 0;
    while (tensors.count("l" + std::to_string(cfg.layers + 1) + ".fwd.W_ih")) ++cfg.layers;
    if (cfg.layers == 0) throw Error::input("weights: missing tensor l1.fwd.W_ih");

    SentimentModel model = SentimentModel::zeros(cfg);
    const std::uint32_t h = static_cast<std::uint32_t>(cfg.hidden_dim);
    for (int l = 0; l < cfg.layers; ++l) {
        const std::uint32_t in_dim = static_cast<std::uint32_t>(cfg.input_width(l));
        load_dir(tensors, l, true, model.layers[l].fwd, h4, in_dim, h);
        if (cfg.bidirectional) load_dir(tensors, l, false, model.layers[l].bwd, h4, in_dim, h);
    }
    const RawTensor& hw = need(tensors, "head.W");
    check_dims(hw, {static_cast<std::uint32_t>(cfg.out_width())}, "head.W");
    copy_in(model.head_w, hw);
    const RawTensor& hb = need(tensors, "head.b");
    check_dims(hb, {1}, "head.b");
    model.head_b = hb.data[0];

    std::set<std::string> expected = {"head.W", "head.b"};
    for (int l = 0; l < cfg.layers; ++l) {
        for (int d = 0; d < cfg.directions(); ++d) {
            const std::string p = dir_prefix(l, d == 0);
            expected.insert(p + "W_ih");
            expected.insert(p + "W_hh");
            expected.insert(p + "b");
        }
    }
    for (const auto& [name, t] : tensors) {
        if (!expected.count(name)) throw Error::input("weights: unexpected tensor " + name);
    }
    return model;
}

void save_baseline_weights(const BaselineModel& model, std::ostream& out) {
    out.write("MLSW", 4);
    put_u32(out, 1);
    put_u32(out, 2);
    write_tensor(out, "baseline.W", {static_cast<std::uint32_t>(model.w.size())},
                 model.w.data());
    write_tensor(out, "baseline.b", {1}, &model.b);
}

BaselineModel load_baseline_weights(std::istream& in) {
    auto tensors = read_container(in);
    BaselineModel m;
    const RawTensor& w = need(tensors, "baseline.W");
    if (w.dims.size() != 1) throw Error::input("weights: baseline.W must be rank 1");
    copy_in(m.w, w);
    const RawTensor& b = need(tensors, "baseline.b");
    check_dims(b, {1}, "baseline.b");
    m.b = b.data[0];
    return m;
}

bool weights_file_is_baseline(std::istream& in) {
    const auto pos = in.tellg();
    auto tensors = read_container(in);
    in.clear();
    in.seekg(pos);
    return tensors.count("baseline.W") > 0;
}

} // namespace sentiline
