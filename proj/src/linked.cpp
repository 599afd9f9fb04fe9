#include "lsgdd/linked.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsgdd {

namespace {

std::string pair_name(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

std::string triple_name(int i, int j, int l) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(l + 1) + ")";
}

Rational rat(const Int& n) { return Rational(n); }

bool integral_nonneg(const Rational& r, Int* out) {
    if (boost::multiprecision::denominator(r) != 1 || r < 0) return false;
    if (out) *out = boost::multiprecision::numerator(r);
    return true;
}

}  // namespace

void LinkedParams::validate(int f) const {
    base.validate();
    if (base.k * base.k != sigma * base.k + tau * (base.v - base.k))
        throw std::invalid_argument("LinkedParams: k^2 = sigma*k + tau*(v-k) fails for " + to_string());
    const Int st = sigma - tau;
    if (st * st != base.k - base.lambda1)
        throw std::invalid_argument("LinkedParams: (sigma-tau)^2 = k - lambda1 fails for " + to_string());
    if (f >= 3 && (base.k - base.lambda1) + base.n * (base.lambda1 - base.lambda2) != 0)
        throw std::invalid_argument("LinkedParams: (k-l1) + n(l1-l2) = 0 fails for " + to_string());
}

std::optional<Int> LinkedParams::alpha() const {
    if (base.k % base.m != 0) return std::nullopt;
    return base.k / base.m;
}

std::string LinkedParams::to_string() const {
    return base.to_string() + " sigma=" + sigma.str() + " tau=" + tau.str();
}

SigmaTauDerivation derive_params(const GddParams& base, RootSign sign) {
    base.validate();
    SigmaTauDerivation out;
    const Rational v = rat(base.v), k = rat(base.k);
    if (base.proper()) {
        const QuadExt s = QuadExt::sqrt_of(rat(base.k - base.lambda1));
        const QuadExt signed_s = sign == RootSign::Plus ? s : -s;
        out.sigma = (QuadExt(k * k) + QuadExt(v - k) * signed_s) / QuadExt(v);
        out.tau = QuadExt(k) * (QuadExt(k) - signed_s) / QuadExt(v);
    } else {
        // Improper case: (sigma-tau)^2 = k - lambda and tau(sigma-tau+k) = k*lambda.
        const Rational lambda = rat(base.lambda1);
        const QuadExt s = QuadExt::sqrt_of(rat(base.k) - lambda);
        const QuadExt signed_s = sign == RootSign::Plus ? s : -s;
        out.tau = QuadExt(k * lambda) / (signed_s + QuadExt(k));
        out.sigma = out.tau + signed_s;
    }
    if (out.sigma.is_integer() && out.tau.is_integer() && out.sigma.sign() >= 0 && out.tau.sign() >= 0) {
        out.integral = true;
        LinkedParams p{base, boost::multiprecision::numerator(out.sigma.as_rational()),
                       boost::multiprecision::numerator(out.tau.as_rational())};
        out.params = p;
    }
    return out;
}

LinkedSystem::LinkedSystem(int f, LinkedParams params, std::map<std::pair<int, int>, IntMatrix> matrices)
    : f_(f), params_(std::move(params)), mats_(std::move(matrices)) {
    if (f_ < 2) throw std::invalid_argument("LinkedSystem: need f >= 2");
    for (int i = 0; i < f_; ++i)
        for (int j = i + 1; j < f_; ++j) {
            auto ij = mats_.find({i, j});
            auto ji = mats_.find({j, i});
            if (ij == mats_.end() && ji == mats_.end())
                throw std::invalid_argument("LinkedSystem: missing matrix for pair " + pair_name(i, j));
            if (ij == mats_.end()) mats_.insert({{i, j}, ji->second.transpose()});
            if (ji == mats_.end()) mats_.insert({{j, i}, ij->second.transpose()});
        }
    const auto v = static_cast<std::size_t>(to_int64(params_.base.v));
    for (const auto& [key, m] : mats_)
        if (m.rows() != v || m.cols() != v)
            throw std::invalid_argument("LinkedSystem: matrix " + pair_name(key.first, key.second) +
                                        " is " + m.shape() + ", expected " + std::to_string(v) + "x" +
                                        std::to_string(v));
}

const IntMatrix& LinkedSystem::at(int i, int j) const {
    auto it = mats_.find({i, j});
    if (it == mats_.end())
        throw std::out_of_range("LinkedSystem: no matrix for pair " + pair_name(i, j));
    return it->second;
}

LinkedCertificate verify_linked(const LinkedSystem& sys) {
    LinkedCertificate cert;
    Report& report = cert.report;
    const LinkedParams& p = sys.params();
    const int f = sys.f();

    try {
        p.validate(f);
    } catch (const std::invalid_argument& e) {
        report.fail("params", e.what());
        return cert;
    }

    // Transpose pairing.
    for (int i = 0; i < f; ++i)
        for (int j = i + 1; j < f; ++j)
            if (sys.at(j, i) != sys.at(i, j).transpose())
                report.fail("pairing", "A" + pair_name(j, i) + " != A" + pair_name(i, j) + "^T");

    // (L1): every ordered pair is the stated SGDD.
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) {
            if (i == j) continue;
            Report r = check_sgdd(sys.at(i, j), p.base);
            if (!r.ok()) report.merge(r, "L1 " + pair_name(i, j) + " ");
        }
    if (!report.ok()) return cert;

    // (L2): A_{i,j} A_{j,l} = sigma A_{i,l} + tau (J - A_{i,l}).
    const auto v = static_cast<std::size_t>(to_int64(p.base.v));
    bool sigma_tau_consistent = true;
    for (int i = 0; i < f && sigma_tau_consistent; ++i)
        for (int j = 0; j < f && sigma_tau_consistent; ++j)
            for (int l = 0; l < f && sigma_tau_consistent; ++l) {
                if (i == j || j == l || i == l) continue;
                const IntMatrix prod = sys.at(i, j) * sys.at(j, l);
                const IntMatrix& ref = sys.at(i, l);
                Int on = -1, off = -1;  // measured values on/off the support of A_{i,l}
                for (std::size_t x = 0; x < v && sigma_tau_consistent; ++x)
                    for (std::size_t y = 0; y < v; ++y) {
                        Int& slot = ref(x, y) == 1 ? on : off;
                        if (slot == -1) {
                            slot = prod(x, y);
                        } else if (slot != prod(x, y)) {
                            report.fail("L2", "triple " + triple_name(i, j, l) + ": product not two-valued at (" +
                                                  std::to_string(x) + "," + std::to_string(y) + ")");
                            sigma_tau_consistent = false;
                            break;
                        }
                    }
                if (!sigma_tau_consistent) break;
                if (!cert.measured_valid) {
                    cert.measured_valid = true;
                    cert.measured_sigma = on;
                    cert.measured_tau = off;
                } else if (cert.measured_sigma != on || cert.measured_tau != off) {
                    report.fail("L2", "triple " + triple_name(i, j, l) + ": measured (sigma,tau)=(" + on.str() +
                                          "," + off.str() + ") differs from earlier triples");
                    sigma_tau_consistent = false;
                }
            }
    if (cert.measured_valid && (cert.measured_sigma != p.sigma || cert.measured_tau != p.tau))
        report.fail("sigma-tau", "measured (" + cert.measured_sigma.str() + "," + cert.measured_tau.str() +
                                     ") vs stated (" + p.sigma.str() + "," + p.tau.str() + ")");
    if (f == 2) report.note("f=2: (L2) vacuous");

    // Block sums for proper systems with f >= 3.
    if (f >= 3 && p.base.proper()) {
        auto alpha = p.alpha();
        if (!alpha) {
            report.fail("block-sums", "k/m is not integral");
        } else {
            const auto m = static_cast<std::size_t>(to_int64(p.base.m));
            const auto n = static_cast<std::size_t>(to_int64(p.base.n));
            const IntMatrix imjn = IntMatrix::identity(m).kron(IntMatrix::ones(n, n));
            const IntMatrix target = IntMatrix::ones(v, v).scaled(*alpha);
            for (int i = 0; i < f; ++i)
                for (int j = 0; j < f; ++j) {
                    if (i == j) continue;
                    if (sys.at(i, j) * imjn != target || imjn * sys.at(i, j) != target)
                        report.fail("block-sums", "A" + pair_name(i, j) + " block sums != k/m");
                }
        }
    }
    return cert;
}

namespace {

LinkedSystem verified(LinkedSystem sys) {
    LinkedCertificate cert = verify_linked(sys);
    require_ok(cert.report);
    return sys;
}

}  // namespace

LinkedSystem complement_system(const LinkedSystem& sys) {
    const LinkedParams& p = sys.params();
    GddParams cb{p.base.v,
                 p.base.v - p.base.k,
                 p.base.m,
                 p.base.n,
                 p.base.v - 2 * p.base.k + p.base.lambda1,
                 p.base.v - 2 * p.base.k + p.base.lambda2};
    LinkedParams cp{cb, p.base.v - 2 * p.base.k + p.tau, p.base.v - 2 * p.base.k + p.sigma};
    const auto v = static_cast<std::size_t>(to_int64(p.base.v));
    std::map<std::pair<int, int>, IntMatrix> mats;
    for (int i = 0; i < sys.f(); ++i)
        for (int j = 0; j < sys.f(); ++j)
            if (i != j) mats.insert({{i, j}, IntMatrix::ones(v, v) - sys.at(i, j)});
    return verified(LinkedSystem(sys.f(), cp, std::move(mats)));
}

LinkedSystem from_two_valued_family(const std::vector<SgddInstance>& family) {
    if (family.size() < 2) throw std::invalid_argument("from_two_valued_family: need at least 2 designs");
    const GddParams p = family[0].params;
    for (const auto& inst : family)
        if (inst.params != p)
            throw std::invalid_argument("from_two_valued_family: designs have different parameters");
    for (const auto& inst : family)
        if (!check_block_sums(inst))
            throw std::invalid_argument("from_two_valued_family: block-sum condition fails");

    const int f = static_cast<int>(family.size());
    const auto v = static_cast<std::size_t>(to_int64(p.v));
    Int sigma = 0, tau = 0;
    bool have_st = false;
    std::map<std::pair<int, int>, IntMatrix> mats;
    for (int i = 0; i < f; ++i)
        for (int j = i + 1; j < f; ++j) {
            const IntMatrix prod =
                family[static_cast<std::size_t>(i)].matrix * family[static_cast<std::size_t>(j)].matrix.transpose();
            const auto values = entry_values(prod);
            if (values.size() != 2)
                throw std::invalid_argument("from_two_valued_family: product " + pair_name(i, j) + " has " +
                                            std::to_string(values.size()) + " distinct entries, not 2");
            const Int lo = *values.begin(), hi = *values.rbegin();
            if (!have_st) {
                sigma = hi;
                tau = lo;
                have_st = true;
            } else if (sigma != hi || tau != lo) {
                throw std::invalid_argument("from_two_valued_family: product " + pair_name(i, j) +
                                            " has entry pair (" + hi.str() + "," + lo.str() +
                                            ") unlike earlier pairs");
            }
            IntMatrix a(v, v);
            for (std::size_t x = 0; x < v; ++x)
                for (std::size_t y = 0; y < v; ++y) a(x, y) = prod(x, y) == sigma ? 1 : 0;
            mats.insert({{i, j}, std::move(a)});
        }

    // Parameter transform x -> ((k-l1) x + C) / (sigma-tau)^2.
    const Rational C = rat(p.lambda1 - p.lambda2) * rat(p.k) * rat(p.k) / rat(p.m) +
                       rat(p.lambda2) * rat(p.k) * rat(p.k) - 2 * rat(tau) * rat(p.k) * rat(p.k) +
                       rat(tau) * rat(tau) * rat(p.v);
    const Rational denom = rat(sigma - tau) * rat(sigma - tau);
    auto g = [&](const Int& x) {
        Rational r = (rat(p.k - p.lambda1) * rat(x) + C) / denom;
        Int out;
        if (!integral_nonneg(r, &out))
            throw std::invalid_argument("from_two_valued_family: transformed parameter " +
                                        rational_to_string(r) + " is not a nonnegative integer");
        return out;
    };
    GddParams outp{p.v, g(p.k), p.m, p.n, g(p.lambda1), g(p.lambda2)};
    LinkedParams lp{outp, g(sigma), g(tau)};
    return verified(LinkedSystem(f, lp, std::move(mats)));
}

Report check_c_family(const CFamily& fam) {
    Report report;
    if (fam.mats.empty()) {
        report.fail("family", "empty matrix family");
        return report;
    }
    const auto m = static_cast<std::size_t>(to_int64(fam.m));
    const auto n = static_cast<std::size_t>(to_int64(fam.n));
    const std::size_t v = m * n;
    for (const auto& c : fam.mats)
        if (c.rows() != v || c.cols() != v) {
            report.fail("family", "member is " + c.shape() + ", expected " + std::to_string(v) + "x" +
                                      std::to_string(v));
            return report;
        }

    IntMatrix sum(v, v);
    for (const auto& c : fam.mats) sum += c;
    const IntMatrix imjn = IntMatrix::identity(m).kron(IntMatrix::ones(n, n));
    const IntMatrix iv = IntMatrix::identity(v);
    const IntMatrix jv = IntMatrix::ones(v, v);
    IntMatrix rhs = iv.scaled(fam.k) + (imjn - iv).scaled(fam.lambda1) + (jv - imjn).scaled(fam.lambda2);
    if (std::string d = first_difference(sum, rhs); !d.empty())
        report.fail("sum-identity", "sum of the family differs at " + d);

    const IntMatrix betaj = jv.scaled(fam.beta);
    for (std::size_t a = 0; a < fam.mats.size(); ++a)
        for (std::size_t b = 0; b < fam.mats.size(); ++b) {
            const IntMatrix prod = fam.mats[a] * fam.mats[b].transpose();
            const IntMatrix want = a == b ? fam.mats[a].scaled(fam.alpha) : betaj;
            if (std::string d = first_difference(prod, want); !d.empty()) {
                report.fail("product", "C_" + std::to_string(a) + " C_" + std::to_string(b) +
                                           "^T differs at " + d);
                return report;
            }
        }

    const Int al1 = fam.alpha * fam.lambda1, al2 = fam.alpha * fam.lambda2, bl = fam.beta * fam.l();
    const bool branch1 = al1 != al2 && al2 == bl;
    const bool branch2 = al1 == al2 && al2 != bl;
    if (!branch1 && !branch2)
        report.fail("branch", "neither alpha*l1 != alpha*l2 == beta*l nor alpha*l1 == alpha*l2 != beta*l holds");
    return report;
}

GddParams c_family_output_params(const CFamily& fam) {
    const Int al1 = fam.alpha * fam.lambda1, al2 = fam.alpha * fam.lambda2, bl = fam.beta * fam.l();
    Int mstar, nstar;
    if (al1 != al2 && al2 == bl) {
        mstar = fam.l() * fam.m;
        nstar = fam.n;
    } else if (al1 == al2 && al2 != bl) {
        mstar = fam.l();
        nstar = fam.m * fam.n;
    } else {
        throw std::invalid_argument("c_family_output_params: branch condition fails");
    }
    return GddParams{fam.l() * fam.m * fam.n, fam.alpha * fam.k, mstar, nstar, al1, bl};
}

std::pair<Int, Int> c_family_sigma_tau(const CFamily& fam) {
    return {fam.alpha + (fam.l() - 1) * fam.beta, (fam.l() - 1) * fam.beta};
}

IntMatrix substitute(const LatinSquare& square, const std::vector<IntMatrix>& mats) {
    if (mats.size() != square.order())
        throw std::invalid_argument("substitute: need one matrix per symbol");
    const std::size_t l = square.order();
    const std::size_t b = mats[0].rows();
    for (const auto& m : mats)
        if (m.rows() != b || m.cols() != b)
            throw std::invalid_argument("substitute: replacement matrices must be square of equal order");
    IntMatrix out(l * b, l * b);
    const BlockIndex idx{l, l, b};
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            out.set_block(idx, i, j, mats[static_cast<std::size_t>(square.cell(i, j))]);
    return out;
}

SgddInstance construct_sgdd_from_c_family(const CFamily& fam, const LatinSquare& square) {
    require_ok(check_c_family(fam));
    if (square.order() != fam.mats.size())
        throw std::invalid_argument("construct_sgdd_from_c_family: square order != family size");
    return verify_sgdd(substitute(square, fam.mats), c_family_output_params(fam));
}

LinkedSystem construct_theorem_general(const CFamily& fam, const LinkedUfsFamily& squares) {
    require_ok(check_c_family(fam));
    require_ok(verify_linked_family(squares));
    if (squares.order() != fam.mats.size())
        throw std::invalid_argument("construct_theorem_general: family order != matrix count");
    const GddParams outp = c_family_output_params(fam);
    const auto [sigma, tau] = c_family_sigma_tau(fam);
    std::map<std::pair<int, int>, IntMatrix> mats;
    for (int i = 0; i < squares.f; ++i)
        for (int j = 0; j < squares.f; ++j)
            if (i != j) mats.insert({{i, j}, substitute(squares.at(i, j), fam.mats)});
    return verified(LinkedSystem(squares.f, LinkedParams{outp, sigma, tau}, std::move(mats)));
}

LinkedSystem construct_gh_ufs(const GeneralizedHadamard& h, const std::vector<LatinSquare>& squares) {
    const Int g = h.group.order();
    const Int l = h.lambda;
    const std::size_t q = h.size();  // g*lambda
    if (squares.empty()) throw std::invalid_argument("construct_gh_ufs: need at least one square");
    for (const auto& s : squares)
        if (s.order() != q)
            throw std::invalid_argument("construct_gh_ufs: squares must have order " + std::to_string(q));
    for (std::size_t i = 0; i < squares.size(); ++i)
        for (std::size_t j = i + 1; j < squares.size(); ++j)
            if (!are_ufs(squares[i], squares[j]))
                throw std::invalid_argument("construct_gh_ufs: squares " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are not UFS");

    CFamily fam{c_matrices(h), g * l, 0, l, g * l, g, g * l, l};
    require_ok(check_c_family(fam));
    const GddParams outp = c_family_output_params(fam);

    std::vector<SgddInstance> designs;
    designs.reserve(squares.size() + 1);
    for (const auto& s : squares) designs.push_back(verify_sgdd(substitute(s, fam.mats), outp));
    designs.push_back(m_matrix(h));

    LinkedSystem sys = from_two_valued_family(designs);
    Report post;
    if (sys.params().base != outp)
        post.fail("parameters", "expected " + outp.to_string() + ", got " + sys.params().base.to_string());
    const Int want_sigma = (g + g * l - 1) * l, want_tau = (g * l - 1) * l;
    if (sys.params().sigma != want_sigma || sys.params().tau != want_tau)
        post.fail("sigma-tau", "expected (" + want_sigma.str() + "," + want_tau.str() + "), got (" +
                                   sys.params().sigma.str() + "," + sys.params().tau.str() + ")");
    require_ok(post);
    return sys;
}

LinkedSystem construct_gh1_linked(const GeneralizedHadamard& h, const LinkedUfsFamily& fam) {
    if (h.lambda != 1) throw std::invalid_argument("construct_gh1_linked: need lambda = 1");
    const Int g = h.group.order();
    if (Int(fam.order()) != g + 1)
        throw std::invalid_argument("construct_gh1_linked: family order must be g+1 = " + (g + 1).str());
    const auto gs = static_cast<std::size_t>(to_int64(g));
    std::vector<IntMatrix> mats;
    mats.push_back(IntMatrix::identity(gs).kron(IntMatrix::ones(gs, gs)));  // C_0
    for (auto& c : c_matrices(h)) mats.push_back(std::move(c));
    CFamily cfam{std::move(mats), g + 1, 1, 1, 1, g * g, g, 1};
    return construct_theorem_general(cfam, fam);
}

CFamily two_gh_c_family(const GeneralizedHadamard& h, const GeneralizedHadamard& k) {
    if (h.group != k.group) throw std::invalid_argument("two_gh_c_family: groups differ");
    const Int g = h.group.order();
    if (h.lambda != g * k.lambda)
        throw std::invalid_argument("two_gh_c_family: need lambda_H = g * lambda_K");
    const Int l = k.lambda;
    const auto gs = static_cast<std::size_t>(to_int64(g));
    std::vector<IntMatrix> mats = c_matrices(h);
    const IntMatrix jg = IntMatrix::ones(gs, gs);
    for (const auto& c : c_matrices(k)) mats.push_back(c.kron(jg));
    return CFamily{std::move(mats), g * (g + 1) * l, g * l, (g + 1) * l, g * l, g * g, g * g * l, g * l};
}

TwoGhHypothesisReport check_two_gh_hypotheses(const GeneralizedHadamard& h, const GeneralizedHadamard& k) {
    TwoGhHypothesisReport out{};
    const CFamily fam = two_gh_c_family(h, k);
    out.report = check_c_family(fam);
    out.derived_params = c_family_output_params(fam);
    out.derived_sigma_tau = c_family_sigma_tau(fam);
    const Int g = h.group.order();
    const Int l = k.lambda;
    out.stated_sigma_tau = {g * (2 * g + 1) * l - 1, g * (g + 1) * l - 1};
    out.sigma_tau_match = out.derived_sigma_tau == out.stated_sigma_tau;
    if (!out.sigma_tau_match)
        out.report.note("stated (sigma,tau)=(" + out.stated_sigma_tau.first.str() + "," +
                        out.stated_sigma_tau.second.str() + ") differs from derived (" +
                        out.derived_sigma_tau.first.str() + "," + out.derived_sigma_tau.second.str() +
                        "); the verifier reports measured values");
    return out;
}

LinkedSystem construct_two_gh(const GeneralizedHadamard& h, const GeneralizedHadamard& k,
                              const LinkedUfsFamily& fam) {
    const CFamily cfam = two_gh_c_family(h, k);
    return construct_theorem_general(cfam, fam);
}

CFamily biangular_c_family(const HadamardMatrix& h) {
    const std::size_t n = h.order();
    if (n % 4 != 0)
        throw std::invalid_argument("biangular_c_family: Hadamard order must be divisible by 4");
    for (std::size_t j = 0; j < n; ++j)
        if (h.entries(0, j) != 1)
            throw std::invalid_argument("biangular_c_family: Hadamard matrix must be normalized (first row all ones)");
    std::vector<IntMatrix> mats;
    mats.reserve(n - 1);
    for (std::size_t l = 1; l < n; ++l) {
        IntMatrix p(n, n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) p(x, y) = h.entries(l, x) == h.entries(l, y) ? 1 : 0;
        mats.push_back(std::move(p));
    }
    const Int nn = Int(n);
    return CFamily{std::move(mats), nn - 1, (nn - 2) / 2, (nn - 2) / 2, 1, nn, nn / 2, nn / 4};
}

namespace {

LinkedSystem finish_biangular(const HadamardMatrix& h, const LinkedUfsFamily& fam) {
    const Int n = Int(h.order());
    if (Int(fam.order()) != n - 1)
        throw std::invalid_argument("construct_biangular: family order must be n-1");
    LinkedSystem sys = construct_theorem_general(biangular_c_family(h), fam);
    Report post;
    const GddParams want{n * (n - 1), n * (n - 1) / 2, n - 1, n, n * (n - 2) / 4, n * (n - 1) / 4};
    if (sys.params().base != want)
        post.fail("parameters", "expected " + want.to_string() + ", got " + sys.params().base.to_string());
    if (sys.params().sigma != n * n / 4 || sys.params().tau != n * (n - 2) / 4)
        post.fail("sigma-tau", "expected (n^2/4, n(n-2)/4)");
    require_ok(post);
    return sys;
}

}  // namespace

LinkedSystem construct_biangular(const HadamardMatrix& h, const LinkedUfsFamily& fam) {
    return finish_biangular(h, fam);
}

LinkedSystem construct_biangular(const HadamardMatrix& h, const std::vector<LatinSquare>& squares) {
    return finish_biangular(h, linked_family_from_mutually_ufs(squares));
}

LinkedSystem construct_biangular_from_field(const HadamardMatrix& h, const FiniteField& field) {
    if (field.size() != static_cast<long long>(h.order()) - 1)
        throw std::invalid_argument("construct_biangular_from_field: field order must be n-1");
    const LinkedUfsFamily fam =
        field.p() == 2 ? linked_ufs_from_char2_field(field) : linked_ufs_from_odd_field(field);
    return finish_biangular(h, fam);
}

namespace {

IntMatrix hadamard_split(const IntMatrix& h) {
    const std::size_t m = h.rows();
    IntMatrix a1(m, m), a2(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) (h(i, j) == 1 ? a1 : a2)(i, j) = 1;
    const IntMatrix i2 = IntMatrix::identity(2);
    return a1.kron(i2) + a2.kron(IntMatrix::ones(2, 2) - i2);
}

}  // namespace

LinkedSystem construct_from_mub_hadamard(const std::vector<HadamardMatrix>& hs) {
    if (hs.size() < 2)
        throw std::invalid_argument("construct_from_mub_hadamard: need at least 2 Hadamard matrices");
    const std::size_t m = hs[0].order();
    for (const auto& h : hs)
        if (h.order() != m) throw std::invalid_argument("construct_from_mub_hadamard: orders differ");
    Int root;
    if (!is_perfect_square(Int(m), &root))
        throw std::invalid_argument("construct_from_mub_hadamard: order must be a perfect square");

    const int f = static_cast<int>(hs.size()) + 1;
    std::map<std::pair<int, int>, IntMatrix> pairs;  // Hadamard matrices H_{i,j}, 0-based fibers
    for (int j = 1; j < f; ++j) pairs.insert({{0, j}, hs[static_cast<std::size_t>(j - 1)].entries});
    for (int i = 1; i < f; ++i)
        for (int j = i + 1; j < f; ++j) {
            IntMatrix prod = hs[static_cast<std::size_t>(i - 1)].entries.transpose() *
                             hs[static_cast<std::size_t>(j - 1)].entries;
            IntMatrix hij(m, m);
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t y = 0; y < m; ++y) {
                    if (prod(x, y) != root && prod(x, y) != -root)
                        throw std::invalid_argument(
                            "construct_from_mub_hadamard: pair " + pair_name(i, j) +
                            " is not unbiased (entry " + prod(x, y).str() + ")");
                    hij(x, y) = prod(x, y) / root;
                }
            pairs.insert({{i, j}, std::move(hij)});
        }

    std::map<std::pair<int, int>, IntMatrix> mats;
    for (auto& [key, hm] : pairs) mats.insert({key, hadamard_split(hm)});
    const Int mm = Int(m);
    GddParams base{2 * mm, mm, mm, 2, 0, mm / 2};
    LinkedParams lp{base, (mm + root) / 2, (mm - root) / 2};
    return verified(LinkedSystem(f, lp, std::move(mats)));
}

std::vector<HadamardMatrix> extract_mub_hadamard(const LinkedSystem& sys) {
    const GddParams& p = sys.params().base;
    if (sys.f() < 3) throw std::invalid_argument("extract_mub_hadamard: need f >= 3");
    if (p.n != 2 || p.k != p.m || p.lambda1 != 0 || 2 * p.lambda2 != p.m)
        throw std::invalid_argument("extract_mub_hadamard: parameters are not (2m,m,m,2,0,m/2)");
    std::vector<HadamardMatrix> out;
    for (int j = 1; j < sys.f(); ++j)
        out.push_back(sgdd_to_hadamard(SgddInstance{p, sys.at(0, j)}));
    if (!mub_hadamard_check(out))
        throw VerificationError([] {
            Report r;
            r.fail("unbiased", "extracted Hadamard matrices are not mutually unbiased");
            return r;
        }());
    return out;
}

FeasibleTables enumerate_feasible(long long vmax) {
    if (vmax < 4) throw std::invalid_argument("enumerate_feasible: vmax must be >= 4");
    FeasibleTables out;
    for (long long v = 4; v <= vmax; ++v) {
        for (long long m = 2; m * 2 <= v; ++m) {
            if (v % m != 0) continue;
            const long long n = v / m;
            if (n < 2) continue;
            for (long long k = 1; k < v; ++k) {
                const Rational l1 = Rational(Int(k) * (Int(k) - m), Int(m) * (n - 1));
                const Rational l2 = Rational(Int(k) * k, Int(v));
                const Rational al = Rational(Int(k), Int(m));
                Int l1i, l2i, ali;
                if (!integral_nonneg(l1, &l1i) || !integral_nonneg(l2, &l2i) || !integral_nonneg(al, &ali))
                    continue;
                GddParams base{Int(v), Int(k), Int(m), Int(n), l1i, l2i};
                const SigmaTauDerivation st = derive_params(base, RootSign::Plus);

                if (st.integral && v < vmax && !(k == m && n == 2)) {
                    FeasibleRow row;
                    row.params = base;
                    row.sigma = st.params->sigma;
                    row.tau = st.params->tau;
                    row.alpha = ali;
                    row.sigma_exact = st.sigma;
                    row.tau_exact = st.tau;
                    row.upper_bound = bound_f(base);
                    out.table1.push_back(std::move(row));
                }
                if (!st.integral && 2 * k <= v) {
                    FeasibleRow row;
                    row.params = base;
                    row.alpha = ali;
                    row.sigma_exact = st.sigma;
                    row.tau_exact = st.tau;
                    out.table2.push_back(std::move(row));
                }
            }
        }
    }
    return out;
}

Int bound_f(const GddParams& params) {
    params.validate();
    const Int v = params.v, k = params.k, m = params.m, n = params.n;
    // Feasibility identities of linked systems with f >= 3.
    if (rat(params.lambda1) != rat(k) * rat(k - m) / (rat(m) * rat(n - 1)) ||
        rat(params.lambda2) != rat(k) * rat(k) / rat(v))
        throw std::invalid_argument("bound_f: parameters " + params.to_string() +
                                    " do not satisfy the feasibility identities");
    if (m == k && n == 2) {
        return (m + 2) / 2;  // floor(m/2 + 1)
    }
    if (m * n - 2 * k >= 0) {
        const Int m1 = m * (n - 1);
        return (m1 + 2) * (m1 - 1) / (2 * (m * n - 1));
    }
    const QuadExt root = QuadExt::sqrt_of(rat(k) * rat(m * n - k) / (rat(m) * rat(n - 1)));
    const QuadExt bound = QuadExt(rat(m * (n - 2)) / rat(2 * k - m * n)) * root;
    return bound.floor();
}

std::optional<std::pair<Int, Int>> lambda1_zero_form(const GddParams& params) {
    params.validate();
    if (params.lambda1 != 0) return std::nullopt;
    const Int n = params.n;
    if (params.k != params.m) return std::nullopt;
    if (params.m % (n * n) != 0) return std::nullopt;
    Int l;
    if (!is_perfect_square(params.m / (n * n), &l)) return std::nullopt;
    if (params.lambda2 != n * l * l || params.v != n * n * n * l * l) return std::nullopt;
    return std::make_pair(n, l);
}

}  // namespace lsgdd
