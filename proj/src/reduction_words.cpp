#include "dfamin/reduction_words.hpp"

#include <algorithm>
#include <set>

#include "dfamin/errors.hpp"
#include "dfamin/reduction_params.hpp"

namespace dfamin {

namespace reduction {

std::vector<Word> u_block(std::uint64_t i, Symbol alpha) {
    const Symbol beta = alpha == A ? B : A;
    std::vector<Word> words;
    words.reserve(i);
    for (std::uint64_t x = 1; x <= i; ++x) {
        Word w(x, beta);
        w.push_back(alpha);
        words.push_back(std::move(w));
    }
    return words;
}

} // namespace reduction

namespace {

using reduction::A;
using reduction::B;
using reduction::u_block;

std::uint64_t to_index(const BigInt& value, const char* what) {
    if (value < 0 || value > 100'000'000)
        throw GuardError(std::string(what) + " too large to materialize: " + value.str());
    return value.convert_to<std::uint64_t>();
}

Word run(Symbol s, std::uint64_t len) { return Word(len, s); }

Word cat(std::initializer_list<Word> parts) {
    Word out;
    for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace

std::size_t WordBlock::max_length() const {
    std::size_t mid = 0, suf = 0;
    for (const Word& w : mids) mid = std::max(mid, w.size());
    for (const Word& w : suffixes) suf = std::max(suf, w.size());
    return prefix.size() + mid + infix.size() + suf;
}

void WordBlock::for_each(const std::function<void(const Word&)>& fn) const {
    Word w;
    for (const Word& mid : mids) {
        for (const Word& suffix : suffixes) {
            w = prefix;
            w.insert(w.end(), mid.begin(), mid.end());
            w.insert(w.end(), infix.begin(), infix.end());
            w.insert(w.end(), suffix.begin(), suffix.end());
            fn(w);
        }
    }
}

BigInt Stratum::count() const {
    BigInt total = 0;
    for (const WordBlock& b : blocks) total += b.count();
    return total;
}

BigInt ReductionWordSet::total_count() const {
    BigInt total = 0;
    for (const Stratum& s : strata_) total += s.count();
    return total;
}

BigInt ReductionWordSet::count_within(std::uint64_t m) const {
    BigInt total = 0;
    for (const Stratum& s : strata_)
        for (const WordBlock& b : s.blocks) {
            const std::size_t base = b.prefix.size() + b.infix.size();
            // Count (mid, suffix) pairs with total length <= m; block sizes
            // are small enough to enumerate lengths directly.
            std::vector<std::size_t> suffix_lens;
            suffix_lens.reserve(b.suffixes.size());
            for (const Word& sfx : b.suffixes) suffix_lens.push_back(sfx.size());
            std::sort(suffix_lens.begin(), suffix_lens.end());
            for (const Word& mid : b.mids) {
                const std::size_t used = base + mid.size();
                if (used > m) continue;
                auto end = std::upper_bound(suffix_lens.begin(), suffix_lens.end(), m - used);
                total += static_cast<std::uint64_t>(end - suffix_lens.begin());
            }
        }
    return total;
}

std::size_t ReductionWordSet::max_length() const {
    std::size_t len = 0;
    for (const Stratum& s : strata_)
        for (const WordBlock& b : s.blocks) len = std::max(len, b.max_length());
    return len;
}

void ReductionWordSet::for_each_word(const std::function<void(const Word&)>& fn) const {
    for (const Stratum& s : strata_)
        for (const WordBlock& b : s.blocks) b.for_each(fn);
}

Sample ReductionWordSet::expand_sample(std::uint64_t limit) const {
    if (total_count() > limit)
        throw GuardError("word set of " + total_count().str() +
                         " words exceeds expansion limit " + std::to_string(limit));
    std::vector<Word> words;
    words.reserve(total_count().convert_to<std::size_t>());
    for_each_word([&](const Word& w) { words.push_back(w); });
    return Sample(alphabet_, std::move(words));
}

ReductionWordSet generate_positive_set(const ApnSatInstance& inst,
                                       const ReductionParams& params) {
    ApnSatInstance padded = pad_variables(inst, 2);
    if (params.r != padded.r || params.s != padded.s())
        throw std::invalid_argument("parameters were chosen for a different instance shape");
    const unsigned r = padded.r;
    const unsigned s = padded.s();
    const std::uint64_t k = to_index(params.k, "k");
    const std::uint64_t d = to_index(params.d, "d");
    const std::uint64_t T = to_index(params.T, "T");
    const std::uint64_t M = to_index(params.M, "M");
    const std::uint64_t tail = std::uint64_t(s) + s + T * r; // b-run before u_b suffixes

    const std::vector<Word> u_a = u_block(k + 1, A);
    const std::vector<Word> u_b = u_block(k + 1, B);

    std::vector<Stratum> strata;
    BigInt overlaps = 0;

    // Words starting a.a / a.b: an infix u in U_{k+1}(a), then either a bare
    // a-run or a longer run followed by another U_{k+1}(a) element.
    auto top_like = [&](Symbol second, std::uint64_t bare_run, const std::string& label) {
        std::vector<Word> suffixes{run(A, bare_run)};
        for (const Word& w : u_a) suffixes.push_back(cat({run(A, d + 1), w}));
        strata.push_back(
            Stratum{label, {WordBlock{{A, second}, u_a, {}, std::move(suffixes)}}});
    };
    top_like(A, d, "top");     // bare a^d
    top_like(B, d + 1, "bot"); // bare a^{d+1}

    // Variable words b.a ...
    const std::vector<Word> u_m = u_block(M, B);
    for (unsigned i = 1; i <= r; ++i) {
        std::set<std::uint64_t> ind;
        std::uint64_t produced = 0;
        for (unsigned j = 1; j <= s; ++j) {
            bool applies = padded.clause(j).first->count(i) != 0;
            ind.insert(applies ? j : std::uint64_t(s) + j);
            ++produced;
        }
        for (std::uint64_t t = 0; t < T; ++t) {
            ind.insert(std::uint64_t(s) + s + i + t * r);
            ++produced;
        }
        overlaps += produced - ind.size();

        std::vector<Word> suffixes;
        for (const Word& w : u_a) suffixes.push_back(cat({run(A, d + 1), w}));
        for (std::uint64_t sigma : ind) suffixes.push_back(run(B, sigma));
        for (const Word& w : u_b) suffixes.push_back(cat({run(B, tail), w}));
        Word infix = cat({run(B, i), {A}, run(B, d)});
        strata.push_back(Stratum{"var_" + std::to_string(i),
                                 {WordBlock{{B, A}, u_m, std::move(infix), std::move(suffixes)}}});
    }

    // Clause words b.b ...
    for (unsigned j = 1; j <= s; ++j) {
        Word prefix = cat({{B, B}, run(A, j), {B}, run(B, d)});
        std::vector<Word> plain{run(B, j)};
        for (const Word& w : u_b) plain.push_back(cat({run(B, tail), w}));
        strata.push_back(
            Stratum{"cl_" + std::to_string(j), {WordBlock{prefix, {{}}, {}, std::move(plain)}}});

        const bool positive = padded.clause(j).second;
        std::vector<Word> acc{run(A, positive ? d : d + 1)};
        for (const Word& w : u_a) acc.push_back(cat({run(A, d + 1), w}));
        strata.push_back(Stratum{"cl_acc_" + std::to_string(j),
                                 {WordBlock{std::move(prefix), {{}}, {}, std::move(acc)}}});
    }

    return ReductionWordSet(Alphabet::ab(), std::move(strata), std::move(overlaps));
}

} // namespace dfamin
