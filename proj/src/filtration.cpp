// filtration.cpp

#include "gshift/filtration.hpp"

#include <algorithm>
#include <optional>

#include "gshift/error.hpp"
#include "gshift/language.hpp"

namespace gshift {

namespace {

bool subset_of(const Subset& a, const Subset& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void check_subset(const Subset& s, std::size_t n, const std::string& what)
{
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] >= n)
            throw Error(ErrorKind::InvariantViolation, what + " names an element outside the carrier");
        if (j > 0 && s[j - 1] >= s[j])
            throw Error(ErrorKind::InvariantViolation, what + " must be sorted without repeats");
    }
}

std::string index_name(int i) { return "F_" + std::to_string(i); }

} // namespace

FiltrationModel::FiltrationModel(std::vector<std::string> carrier, int lo, std::vector<Subset> sets)
    : carrier_(std::move(carrier)), lo_(lo), sets_(std::move(sets))
{
    if (carrier_.empty())
        throw Error(ErrorKind::InvariantViolation, "the carrier is empty");
    if (lo_ > 0 || hi() < 0)
        throw Error(ErrorKind::InvariantViolation, "the window must contain 0");
    for (std::size_t j = 0; j < sets_.size(); ++j) {
        int i = lo_ + static_cast<int>(j);
        check_subset(sets_[j], carrier_.size(), index_name(i));
        if (j > 0 && !subset_of(sets_[j], sets_[j - 1]))
            throw Error(ErrorKind::InvariantViolation,
                        index_name(i) + " is not contained in " + index_name(i - 1) + " (filtration must decrease)");
    }
    if (sets_.front().size() != carrier_.size())
        throw Error(ErrorKind::InvariantViolation, index_name(lo_) + " must be the whole carrier");
}

const Subset& FiltrationModel::set(int i) const
{
    if (i < lo_ || i > hi())
        throw Error(ErrorKind::InvalidArgument, index_name(i) + " is outside the window");
    return sets_[static_cast<std::size_t>(i - lo_)];
}

bool FiltrationModel::contains(int i, std::size_t x) const
{
    const Subset& s = set(i);
    return std::binary_search(s.begin(), s.end(), x);
}

namespace {

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

} // namespace

FiltrationModel FiltrationModel::subsample(int stride) const
{
    if (stride < 1)
        throw Error(ErrorKind::InvalidArgument, "stride must be positive");
    int first = ceil_div(lo_, stride), last = floor_div(hi(), stride);
    std::vector<Subset> kept;
    for (int j = first; j <= last; ++j)
        kept.push_back(set(j * stride));
    return FiltrationModel(carrier_, first, std::move(kept));
}

FiltrationModel FiltrationModel::interleave(int i, Subset s) const
{
    if (i < lo_ || i >= hi())
        throw Error(ErrorKind::InvalidArgument, "no gap after " + index_name(i) + " inside the window");
    check_subset(s, carrier_.size(), "inserted set");
    if (!subset_of(s, set(i)) || !subset_of(set(i + 1), s))
        throw Error(ErrorKind::InvariantViolation, "inserted set must lie between " + index_name(i) + " and "
                                                       + index_name(i + 1));
    std::vector<Subset> sets = sets_;
    sets.insert(sets.begin() + (i - lo_ + 1), std::move(s));
    // below 0 the lower indices move down; from 0 up the upper ones move up
    return FiltrationModel(carrier_, i < 0 ? lo_ - 1 : lo_, std::move(sets));
}

Rational mass(const std::vector<Rational>& weights, const Subset& s)
{
    Rational m = 0;
    for (std::size_t x : s)
        m += weights.at(x);
    return m;
}

NormalizedChain eta(const SigmaFiniteWeights& mu, const FiltrationModel& model)
{
    if (mu.size() != model.size())
        throw Error(ErrorKind::InvariantViolation, "weights do not match the carrier size");
    for (const Rational& w : mu)
        if (w < 0)
            throw Error(ErrorKind::InvariantViolation, "weights must be nonnegative");
    NormalizedChain chain{model.lo(), {}};
    for (int i = model.lo(); i <= model.hi(); ++i) {
        Rational m = mass(mu, model.set(i));
        if (m == 0)
            throw Error(ErrorKind::ZeroMass, index_name(i) + " has zero weight");
        std::vector<Rational> mi(mu.size(), 0);
        for (std::size_t x : model.set(i))
            mi[x] = mu[x] / m;
        chain.measures.push_back(std::move(mi));
    }
    return chain;
}

void validate_chain(const NormalizedChain& chain, const FiltrationModel& model)
{
    if (chain.lo != model.lo() || chain.hi() != model.hi())
        throw Error(ErrorKind::InvariantViolation, "chain window differs from the filtration window");
    for (int i = chain.lo; i <= chain.hi(); ++i) {
        const auto& mi = chain.at(i);
        if (mi.size() != model.size())
            throw Error(ErrorKind::InvariantViolation, "mu_" + std::to_string(i) + " does not match the carrier size");
        Rational total = 0;
        for (std::size_t x = 0; x < mi.size(); ++x) {
            if (mi[x] < 0)
                throw Error(ErrorKind::InvariantViolation, "mu_" + std::to_string(i) + " has a negative weight");
            if (mi[x] != 0 && !model.contains(i, x))
                throw Error(ErrorKind::InvariantViolation,
                            "mu_" + std::to_string(i) + " charges a point outside " + index_name(i));
            total += mi[x];
        }
        if (total != 1)
            throw Error(ErrorKind::InvariantViolation, "mu_" + std::to_string(i) + " is not a probability vector");
        if (i == chain.hi())
            continue;
        Rational next_mass = mass(mi, model.set(i + 1));
        if (next_mass == 0)
            throw Error(ErrorKind::InvariantViolation,
                        "mu_" + std::to_string(i) + " gives " + index_name(i + 1) + " zero mass");
        const auto& mn = chain.at(i + 1);
        for (std::size_t x : model.set(i + 1))
            if (mn[x] != mi[x] / next_mass)
                throw Error(ErrorKind::InvariantViolation, "mu_" + std::to_string(i + 1)
                                                               + " is not the normalized restriction of mu_"
                                                               + std::to_string(i));
    }
}

SigmaFiniteWeights eta_inverse(const NormalizedChain& chain, const FiltrationModel& model)
{
    validate_chain(chain, model);
    SigmaFiniteWeights mu(model.size(), 0);
    for (std::size_t x : model.set(0))
        mu[x] = chain.at(0)[x];
    for (int k = 1; -k >= model.lo(); ++k) {
        const auto& mk = chain.at(-k);
        Rational m0 = mass(mk, model.set(0));
        if (m0 == 0)
            throw Error(ErrorKind::ZeroMass, "mu_" + std::to_string(-k) + " gives F_0 zero mass");
        for (std::size_t x : model.set(-k))
            if (!model.contains(-k + 1, x))
                mu[x] = mk[x] / m0;
    }
    return mu;
}

bool scale_equivalent(const SigmaFiniteWeights& mu, const SigmaFiniteWeights& nu)
{
    if (mu.size() != nu.size())
        return false;
    std::optional<Rational> alpha;
    for (std::size_t x = 0; x < mu.size(); ++x) {
        if ((mu[x] == 0) != (nu[x] == 0))
            return false;
        if (mu[x] == 0)
            continue;
        Rational r = nu[x] / mu[x];
        if (r <= 0 || (alpha && *alpha != r))
            return false;
        alpha = r;
    }
    return true;
}

NormalizedChain subsample(const NormalizedChain& chain, int stride)
{
    if (stride < 1)
        throw Error(ErrorKind::InvalidArgument, "stride must be positive");
    int first = ceil_div(chain.lo, stride), last = floor_div(chain.hi(), stride);
    NormalizedChain out{first, {}};
    for (int j = first; j <= last; ++j)
        out.measures.push_back(chain.at(j * stride));
    return out;
}

namespace {

std::vector<Word> continuations(const GFunction& g, const Word& past, std::size_t n)
{
    std::vector<Word> out;
    for (const Word& a : language_words(g.presentation(), n))
        if (g.presentation().accepts(concat(past, a)))
            out.push_back(a);
    return out;
}

} // namespace

FiltrationModel continuation_filtration(const GFunction& g, const Word& past, const Word& y)
{
    const Alphabet& alpha = g.presentation().alphabet();
    std::vector<Word> words = continuations(g, past, y.size());
    if (std::find(words.begin(), words.end(), y) == words.end())
        throw Error(ErrorKind::NotAdmissible, "'" + alpha.format(y) + "' cannot follow the past");
    std::vector<std::string> names;
    for (const Word& a : words)
        names.push_back(alpha.format(a));
    std::vector<Subset> sets;
    for (std::size_t i = 0; i <= y.size(); ++i) {
        Subset s;
        for (std::size_t x = 0; x < words.size(); ++x)
            if (std::equal(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(i), words[x].begin()))
                s.push_back(x);
        sets.push_back(std::move(s));
    }
    return FiltrationModel(std::move(names), 0, std::move(sets));
}

NormalizedChain continuation_chain(const GFunction& g, const Word& past, const Word& y)
{
    FiltrationModel model = continuation_filtration(g, past, y);
    std::vector<Word> words = continuations(g, past, y.size());
    SigmaFiniteWeights mu;
    for (const Word& a : words)
        mu.push_back(mu_g_cylinder(g, past, a));
    return eta(mu, model);
}

} // namespace gshift
