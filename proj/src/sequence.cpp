#include "cwseq/sequence.hpp"

#include <charconv>
#include <sstream>

#include "cwseq/errors.hpp"

namespace cwseq {

std::string HalfInteger::str() const {
    if (is_integral()) return std::to_string(twice_ / 2);
    const long long magnitude = twice_ < 0 ? -twice_ : twice_;
    return std::string(twice_ < 0 ? "-" : "") + std::to_string(magnitude / 2) + ".5";
}

namespace {

void check_alphabet(int q) {
    if (q < 2) throw DomainError("alphabet size must be at least 2, got " + std::to_string(q));
}

void check_symbol(long long value, int q) {
    if (value < 0 || value >= q)
        throw DomainError("symbol " + std::to_string(value) + " outside alphabet [0, " +
                          std::to_string(q - 1) + "]");
}

}  // namespace

Sequence::Sequence(std::vector<int> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
    check_alphabet(q);
    for (int s : symbols_) check_symbol(s, q_);
}

Sequence Sequence::zeros(std::size_t len, int q) {
    check_alphabet(q);
    Sequence s;
    s.symbols_.assign(len, 0);
    s.q_ = q;
    return s;
}

Sequence Sequence::parse(std::string_view text, int q) {
    check_alphabet(q);
    std::vector<int> symbols;
    if (q <= 10) {
        symbols.reserve(text.size());
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw DomainError(std::string("invalid symbol character '") + ch + "'");
            symbols.push_back(ch - '0');
        }
    } else if (!text.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t next = text.find(',', pos);
            std::string_view item = text.substr(pos, next == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : next - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size())
                throw DomainError("invalid symbol '" + std::string(item) + "'");
            symbols.push_back(value);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    }
    return Sequence(std::move(symbols), q);
}

Sequence Sequence::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > symbols_.size())
        throw DomainError("slice [" + std::to_string(pos) + ", " + std::to_string(pos + len) +
                          ") exceeds length " + std::to_string(symbols_.size()));
    Sequence out;
    out.symbols_.assign(symbols_.begin() + pos, symbols_.begin() + pos + len);
    out.q_ = q_;
    return out;
}

std::string Sequence::str() const {
    std::string out;
    if (q_ <= 10) {
        out.reserve(symbols_.size());
        for (int s : symbols_) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += std::to_string(symbols_[i]);
        }
    }
    return out;
}

long long weight(const Sequence& s) {
    long long sum = 0;
    for (int v : s.symbols()) sum += v;
    return sum;
}

namespace {

template <typename Op>
Sequence zip_mod(const Sequence& a, const Sequence& b, Op op, const char* name) {
    if (a.q() != b.q())
        throw DimensionError(std::string(name) + ": alphabet mismatch (q=" + std::to_string(a.q()) +
                             " vs q=" + std::to_string(b.q()) + ")");
    if (a.size() != b.size())
        throw DimensionError(std::string(name) + ": length mismatch (" + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()) + ")");
    const int q = a.q();
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i], q);
    return Sequence(std::move(out), q);
}

}  // namespace

Sequence add_mod(const Sequence& a, const Sequence& b) {
    return zip_mod(a, b, [](int x, int y, int q) { return (x + y) % q; }, "add_mod");
}

Sequence sub_mod(const Sequence& a, const Sequence& b) {
    return zip_mod(a, b, [](int x, int y, int q) { return (x - y + q) % q; }, "sub_mod");
}

Sequence concat(const Sequence& a, const Sequence& b) {
    if (a.q() != b.q()) throw DimensionError("concat: alphabet mismatch");
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.symbols().begin(), a.symbols().end());
    out.insert(out.end(), b.symbols().begin(), b.symbols().end());
    return Sequence(std::move(out), a.q());
}

HalfInteger balancing_value(long long n, int q) {
    check_alphabet(q);
    if (n < 0) throw DomainError("negative length " + std::to_string(n));
    return HalfInteger::from_halves(n * (q - 1));
}

}  // namespace cwseq
