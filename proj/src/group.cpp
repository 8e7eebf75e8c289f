#include "mckay/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mckay/errors.hpp"

namespace mckay {

Mat2 Mat2::identity() {
    return Mat2{CycloNum(Rational(1)), CycloNum(), CycloNum(), CycloNum(Rational(1))};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const {
    CycloNum det = a * d - b * c;
    if (det.is_zero()) throw internal_error("group element with vanishing determinant");
    CycloNum s = det.inverse();
    return Mat2{s * d, -(s * b), -(s * c), s * a};
}

bool Mat2::operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

std::string Mat2::key_at(int M) const {
    return a.key_at(M) + '/' + b.key_at(M) + '/' + c.key_at(M) + '/' + d.key_at(M);
}

namespace {
// Keeps accidental huge inputs from exhausting memory; the supported catalog
// sits far below this.
constexpr long kMaxOrder = 2000;

CycloNum half_of(const CycloNum& x) { return CycloNum(Rational(1, 2)) * x; }
} // namespace

SubgroupSpec cyclic_spec(long n) {
    if (n < 1) throw input_error("cyclic parameter must be at least 1");
    if (n > kMaxOrder) throw input_error("cyclic parameter too large");
    SubgroupSpec s;
    s.name = "C" + std::to_string(n);
    s.order = n;
    s.conductor = static_cast<int>(2 * n);
    s.generators = {Mat2{CycloNum::zeta(static_cast<int>(n), 1), CycloNum(), CycloNum(),
                         CycloNum::zeta(static_cast<int>(n), n - 1)}};
    return s;
}

SubgroupSpec binary_dihedral_spec(long n) {
    if (n < 1) throw input_error("binary dihedral parameter must be at least 1");
    if (n > kMaxOrder / 4) throw input_error("binary dihedral parameter too large");
    SubgroupSpec s;
    s.name = "D" + std::to_string(n);
    s.order = 4 * n;
    s.conductor = static_cast<int>(2 * n);
    CycloNum one(Rational(1));
    s.generators = {
        Mat2{CycloNum::zeta(static_cast<int>(2 * n), 1), CycloNum(), CycloNum(),
             CycloNum::zeta(static_cast<int>(2 * n), 2 * n - 1)},
        Mat2{CycloNum(), one, -one, CycloNum()}};
    return s;
}

SubgroupSpec binary_tetrahedral_spec() {
    SubgroupSpec s;
    s.name = "T";
    s.order = 24;
    s.conductor = 8;
    CycloNum one(Rational(1));
    CycloNum i = CycloNum::zeta(4);
    // The quaternions i, j and the 3-cycle (1+i+j+k)/2.
    s.generators = {
        Mat2{i, CycloNum(), CycloNum(), -i},
        Mat2{CycloNum(), one, -one, CycloNum()},
        Mat2{half_of(one + i), half_of(one + i), half_of(-one + i), half_of(one - i)}};
    return s;
}

SubgroupSpec binary_octahedral_spec() {
    SubgroupSpec s = binary_tetrahedral_spec();
    s.name = "O";
    s.order = 48;
    // Adjoining the eighth root of unity doubles the tetrahedral group.
    s.generators.push_back(
        Mat2{CycloNum::zeta(8, 1), CycloNum(), CycloNum(), CycloNum::zeta(8, 7)});
    return s;
}

SubgroupSpec binary_icosahedral_spec() {
    SubgroupSpec s;
    s.name = "I";
    s.order = 120;
    s.conductor = 20;
    CycloNum one(Rational(1));
    CycloNum i = CycloNum::zeta(4);
    // sqrt(5) = z5 - z5^2 - z5^3 + z5^4, so the golden ratio lives in Q(z5)
    // and everything below in Q(z20).
    CycloNum root5 = CycloNum::zeta(5, 1) - CycloNum::zeta(5, 2) - CycloNum::zeta(5, 3) +
                     CycloNum::zeta(5, 4);
    CycloNum gold = half_of(one + root5);   // (1+sqrt5)/2
    CycloNum goldinv = gold - one;          // (sqrt5-1)/2 = 1/gold
    // Unit quaternions (1+i+j+k)/2 of order 6 and (gold + i/gold + j)/2 of
    // order 10; together they generate the binary icosahedral group.
    s.generators = {
        Mat2{half_of(one + i), half_of(one + i), half_of(-one + i), half_of(one - i)},
        Mat2{half_of(gold + goldinv * i), half_of(one), half_of(-one),
             half_of(gold - goldinv * i)}};
    return s;
}

SubgroupSpec parse_group_name(const std::string& name) {
    if (name == "T") return binary_tetrahedral_spec();
    if (name == "O") return binary_octahedral_spec();
    if (name == "I") return binary_icosahedral_spec();
    if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'D')) {
        const std::string digits = name.substr(1);
        if (std::all_of(digits.begin(), digits.end(),
                        [](unsigned char ch) { return std::isdigit(ch); })) {
            long n = 0;
            try {
                n = std::stol(digits);
            } catch (const std::exception&) {
                throw input_error("group parameter out of range in '" + name + "'");
            }
            return name[0] == 'C' ? cyclic_spec(n) : binary_dihedral_spec(n);
        }
    }
    throw input_error("unknown group '" + name +
                      "' (expected Cn, Dn, T, O, or I)");
}

FiniteSubgroup::FiniteSubgroup(const SubgroupSpec& spec)
    : name_(spec.name), conductor_(spec.conductor) {
    // Breadth-first closure from the identity; element order is therefore
    // deterministic and the identity sits at index 0.
    Mat2 id = Mat2::identity();
    elements_.push_back(id);
    key_to_index_[id.key_at(conductor_)] = 0;
    // rmul[g][e] = index of elements[e] * generators[g], recorded as the BFS
    // discovers edges; used below to fill the full table without any further
    // matrix arithmetic.
    std::vector<std::vector<int>> rmul(spec.generators.size());
    std::vector<int> parent{0}, via{0};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (size_t g = 0; g < spec.generators.size(); ++g) {
            Mat2 f = elements_[e] * spec.generators[g];
            std::string key = f.key_at(conductor_);
            auto [it, fresh] = key_to_index_.try_emplace(
                key, static_cast<int>(elements_.size()));
            if (fresh) {
                if (static_cast<long>(elements_.size()) >= spec.order)
                    throw internal_error("closure of " + name_ +
                                         " exceeds the advertised order " +
                                         std::to_string(spec.order));
                elements_.push_back(f);
                parent.push_back(e);
                via.push_back(static_cast<int>(g));
                queue.push_back(it->second);
            }
            rmul[g].resize(elements_.size(), -1);
            rmul[g][e] = it->second;
        }
    }
    const int n = static_cast<int>(elements_.size());
    if (static_cast<long>(n) != spec.order)
        throw internal_error("closure of " + name_ + " has order " + std::to_string(n) +
                             ", expected " + std::to_string(spec.order));
    for (auto& r : rmul) r.resize(n, -1);

    // Multiplication table by induction over the BFS tree: j = parent * gen
    // gives i*j = (i*parent)*gen, a pure table lookup.
    mul_.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) mul_[i][0] = i;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            int ip = mul_[i][parent[j]];
            int r = rmul[via[j]][ip];
            if (r < 0) { // edge never taken from ip during BFS: compute once
                Mat2 f = elements_[ip] * spec.generators[via[j]];
                auto it = key_to_index_.find(f.key_at(conductor_));
                if (it == key_to_index_.end())
                    throw internal_error(name_ + " is not closed under multiplication");
                r = it->second;
                rmul[via[j]][ip] = r;
            }
            mul_[i][j] = r;
        }

    inv_.assign(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (mul_[i][j] == 0) {
                inv_[i] = j;
                break;
            }
    for (int i = 0; i < n; ++i)
        if (inv_[i] < 0) throw internal_error(name_ + " element without inverse");

    // Conjugacy classes; scanning indices in order makes the first member of
    // each class its smallest index.
    class_of_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (class_of_[i] >= 0) continue;
        int c = static_cast<int>(classes_.size());
        std::vector<int> members;
        for (int g = 0; g < n; ++g) {
            int x = mul_[mul_[g][i]][inv_[g]];
            if (class_of_[x] < 0) {
                class_of_[x] = c;
                members.push_back(x);
            }
        }
        std::sort(members.begin(), members.end());
        classes_.push_back(std::move(members));
    }

    element_order_.assign(n, 0);
    exponent_ = 1;
    for (int i = 0; i < n; ++i) {
        int o = 1, x = i;
        while (x != 0) {
            x = mul_[x][i];
            ++o;
        }
        element_order_[i] = o;
        exponent_ = std::lcm(exponent_, static_cast<long>(o));
    }
}

int FiniteSubgroup::power(int i, long k) const {
    int o = element_order_[i];
    k %= o;
    if (k < 0) k += o;
    int r = 0;
    for (long s = 0; s < k; ++s) r = mul_[r][i];
    return r;
}

int FiniteSubgroup::index_of_key(const std::string& key) const {
    auto it = key_to_index_.find(key);
    return it == key_to_index_.end() ? -1 : it->second;
}

SubgroupPair::SubgroupPair(const SubgroupSpec& nspec, const SubgroupSpec& gspec)
    : sub(nspec), big(gspec), same_group(nspec.name == gspec.name) {
    const int M = std::lcm(sub.conductor(), big.conductor());
    std::map<std::string, int> big_keys;
    for (long i = 0; i < big.order(); ++i)
        big_keys[big.elements()[i].key_at(M)] = static_cast<int>(i);

    into_big.resize(sub.order());
    for (long i = 0; i < sub.order(); ++i) {
        auto it = big_keys.find(sub.elements()[i].key_at(M));
        if (it == big_keys.end())
            throw input_error(sub.name() + " is not a subgroup of " + big.name());
        into_big[i] = it->second;
    }

    // Normality: conjugating the image of N by every element of G must land
    // back inside the image.
    std::vector<bool> in_image(big.order(), false);
    for (int idx : into_big) in_image[idx] = true;
    for (long g = 0; g < big.order(); ++g)
        for (int x : into_big)
            if (!in_image[big.mul(big.mul(static_cast<int>(g), x), big.inv(static_cast<int>(g)))])
                throw input_error(sub.name() + " is not normal in " + big.name());

    big_class_of_sub.resize(sub.order());
    for (long i = 0; i < sub.order(); ++i)
        big_class_of_sub[i] = big.class_of(into_big[i]);
}

std::vector<int> SubgroupPair::sub_class_of_big_element() const {
    std::vector<int> m(big.order(), -1);
    for (long i = 0; i < sub.order(); ++i) m[into_big[i]] = sub.class_of(static_cast<int>(i));
    return m;
}

} // namespace mckay
