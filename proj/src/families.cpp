#include "pushtrack/families.hpp"

#include "pushtrack/errors.hpp"

namespace pushtrack {

namespace {

using Block = std::vector<std::vector<Int>>;

Block block_from(std::initializer_list<std::initializer_list<int>> rows) {
    Block b;
    for (const auto& r : rows) b.emplace_back(r.begin(), r.end());
    return b;
}

Block block_mul(const Block& x, const Block& y) {
    const size_t rows = x.size(), inner = y.size(), cols = y[0].size();
    Block out(rows, std::vector<Int>(cols, Int(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < inner; ++k) {
            const Int& v = x[i][k];
            if (v == 0) continue;
            for (size_t j = 0; j < cols; ++j) out[i][j] += v * y[k][j];
        }
    return out;
}

void place(IntMatrix& m, int r0, int c0, const Block& b) {
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b[i].size(); ++j)
            m.at(r0 + static_cast<int>(i), c0 + static_cast<int>(j)) = b[i][j];
}

Block a_power(int k) {
    const auto [m, qk] = closed_form_power(k);
    Block b(3, std::vector<Int>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    (void)qk;
    return b;
}

}  // namespace

void fixed_blocks(Block& A, Block& B, Block& C, Block& D) {
    A = block_from({{11, 8, 2}, {0, 1, 0}, {0, 0, 1}});
    B = block_from({{5, 0, 5, 4, 4, 0, 1, 0, 1},
                    {1, 1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 1, 1, 0}});
    C = block_from({{2, 2, 0}, {2, 2, 0}, {0, 0, 0},
                    {6, 4, 2}, {2, 2, 0}, {0, 0, 0},
                    {10, 8, 2}, {6, 4, 2}, {0, 0, 0}});
    D = block_from({{2, 0, 2, 2, 1, 0, 0, 0, 0},
                    {1, 1, 0, 0, 1, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 1, 0, 0, 0},
                    {2, 0, 2, 2, 2, 0, 2, 0, 1},
                    {2, 0, 2, 1, 1, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 1, 0},
                    {6, 0, 5, 3, 3, 0, 2, 0, 2},
                    {2, 0, 3, 3, 3, 0, 1, 1, 0},
                    {0, 1, 0, 0, 0, 0, 0, 0, 0}});
}

void winding_blocks(const Int& n, Block& At, Block& Bt, Block& Ct, Block& Dt) {
    const Int z = 0;
    At = {{6 * n + 11, 6 * n + 11, z}, {z, z, z}, {z, z, z}};
    Bt = {{6 * n + 8, 3, 6 * n + 5, 6 * n + 4, 6 * n + 3, z, 1, z, 1, 3, 9 * n - 4,
           6 * n + 4, 9 * n - 1, 9 * n - 7},
          {z, z, z, z, z, 1, z, z, z, z, z, z, z, z},
          {z, z, z, z, 1, z, 1, 1, z, z, 1, 2, 1, 1}};
    Ct = {{2, 2, z}, {2, 2, z}, {z, z, z},
          {4 * n + 6, 4 * n + 6, z}, {2, 2, z}, {z, z, z},
          {4 * n + 10, 4 * n + 10, z}, {4 * n + 6, 4 * n + 6, z}, {z, z, z},
          {z, z, 1}, {6, 5, z}, {2 * n - 2, 2 * n - 2, z}, {z, z, z}, {2, 3, z}};
    Dt = {{2, z, 2, 2, 2, z, z, z, z, 1, 2 * n, 2, 2 * n, 2 * n - 2},
          {1, 1, z, z, z, z, z, z, z, 1, z, z, z, z},
          {z, z, z, z, z, z, z, z, z, z, z, z, 1, 1},
          {4 * n + 4, 2, 4 * n + 2, 4 * n + 2, 4 * n + 2, z, 2, z, 1, 2, 6 * n - 2,
           4 * n + 4, 6 * n, 6 * n - 4},
          {2, z, 2, 1, 1, z, z, z, 1, z, z, z, z, z},
          {z, z, z, z, z, z, z, 1, z, z, z, z, z, z},
          {4 * n + 8, 2, 4 * n + 5, 4 * n + 3, 4 * n + 3, z, 2, z, 2, 2, 6 * n - 2,
           4 * n + 4, 6 * n, 6 * n - 4},
          {4 * n + 4, 2, 4 * n + 3, 4 * n + 3, 4 * n + 3, z, 1, 1, z, 2, 6 * n - 2,
           4 * n + 4, 6 * n, 6 * n - 4},
          {z, 1, z, z, z, z, z, z, z, z, z, z, z, z},
          {z, z, z, z, z, z, z, z, z, z, z, z, z, z},
          {3, 1, 2, 2, 2, z, z, z, z, 2, 2 * n, 2, 2 * n, 2 * n - 2},
          {2 * n - 2, z, 2 * n - 2, 2 * n - 2, 2 * n - 2, z, z, z, z, z, n - 1,
           2 * n - 1, n - 1, n - 1},
          {z, z, z, z, z, z, z, z, z, z, n - 1, z, n, n - 1},
          {3, 1, 2, 2, 2, z, z, z, z, z, n, 2, n + 1, n}};
}

Int q_value(int n) {
    if (n < 0) fail(ErrorKind::BadParameters, "q(n) needs n >= 0");
    return (int_pow(11, static_cast<unsigned>(n)) - 1) / 10;
}

std::pair<IntMatrix, Int> closed_form_power(int n) {
    if (n < 0) fail(ErrorKind::BadParameters, "power needs n >= 0");
    const Int qn = q_value(n);
    IntMatrix m(3, "A^" + std::to_string(n));
    m.at(0, 0) = int_pow(11, static_cast<unsigned>(n));
    m.at(0, 1) = 8 * qn;
    m.at(0, 2) = 2 * qn;
    m.at(1, 1) = 1;
    m.at(2, 2) = 1;
    return {m, qn};
}

CurveDiagram gamma0_curve() {
    // Three self-intersection points, single complementary disk on S_2.
    // Pinned by exact agreement of its incidence matrix with the published
    // genus-2 block matrix.
    std::vector<PassageToken> word = {{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {3, 2}};
    std::vector<Crossing> crossings = {
        {1, Hand::left}, {2, Hand::left}, {3, Hand::right}};
    return CurveDiagram("gamma0", std::move(word), std::move(crossings));
}

CurveDiagram winding_curve(int winds) {
    if (winds < 1) fail(ErrorKind::BadParameters, "winding curve needs winds >= 1");
    // gamma0 with `winds` extra crossings: the curve winds around a handle
    // before its first gamma0 crossing, and the next strand crosses the whole
    // stack of winds once each. Each gap between consecutive winds becomes an
    // unpunctured monogon of the induced pretrack, and no face is a reducible
    // monogon or bigon of the diagram itself.
    std::vector<PassageToken> word;
    std::vector<Crossing> crossings;
    for (int k = 0; k < winds; ++k) word.push_back({1 + k, 1});
    word.push_back({winds + 1, 1});
    for (int k = 0; k < winds; ++k) word.push_back({1 + k, 2});
    word.push_back({winds + 2, 1});
    word.push_back({winds + 1, 2});
    word.push_back({winds + 3, 1});
    word.push_back({winds + 2, 2});
    word.push_back({winds + 3, 2});
    for (int k = 0; k < winds; ++k) crossings.push_back({1 + k, Hand::right});
    crossings.push_back({winds + 1, Hand::left});
    crossings.push_back({winds + 2, Hand::left});
    crossings.push_back({winds + 3, Hand::right});
    return CurveDiagram("winding-" + std::to_string(winds), std::move(word),
                        std::move(crossings));
}

std::pair<IntMatrix, CurveDiagram> fixed_family(int g) {
    if (g < 2) fail(ErrorKind::BadGenus, "fixed family needs genus >= 2");
    Block A, B, C, D;
    fixed_blocks(A, B, C, D);
    const int copies = g - 1;
    IntMatrix m(3 + 9 * copies, "fixed-family-g" + std::to_string(g));
    // First block row: A^{g-1}, A^{g-2}B, ..., AB, B.
    place(m, 0, 0, a_power(copies));
    for (int j = 1; j <= copies; ++j)
        place(m, 0, 3 + 9 * (j - 1), block_mul(a_power(copies - j), B));
    // Block row i: C A^{i-1}, C A^{i-2}B, ..., CB, D, 0, ...
    for (int i = 1; i <= copies; ++i) {
        const int r = 3 + 9 * (i - 1);
        place(m, r, 0, block_mul(C, a_power(i - 1)));
        for (int j = 1; j < i; ++j)
            place(m, r, 3 + 9 * (j - 1), block_mul(C, block_mul(a_power(i - 1 - j), B)));
        place(m, r, 3 + 9 * (i - 1), D);
    }

    // The lifted curve: g-1 relabeled copies of gamma0's code in traversal
    // order; the deck rotation preserves every crossing sign.
    const CurveDiagram base = gamma0_curve();
    std::vector<PassageToken> word;
    std::vector<Crossing> crossings;
    for (int k = 0; k < copies; ++k) {
        for (const auto& t : base.word()) word.push_back({t.crossing + 3 * k, t.passage});
        for (const auto& c : base.crossings())
            crossings.push_back({c.id + 3 * k, c.first_passage_inbound});
    }
    CurveDiagram curve("fixed-family-g" + std::to_string(g), std::move(word),
                       std::move(crossings));
    return {std::move(m), std::move(curve)};
}

IntMatrix winding_family(int g, const Int& n) {
    if (g < 3) fail(ErrorKind::BadParameters, "winding family needs genus >= 3");
    if (n < 2) fail(ErrorKind::BadParameters, "winding family needs winding >= 2");
    Block A, B, C, D, At, Bt, Ct, Dt;
    fixed_blocks(A, B, C, D);
    winding_blocks(n, At, Bt, Ct, Dt);
    const int copies = g - 2;
    IntMatrix m(3 + 9 * copies + 14,
                "winding-family-g" + std::to_string(g) + "-n" + n.str());
    place(m, 0, 0, block_mul(At, a_power(copies)));
    for (int j = 1; j <= copies; ++j)
        place(m, 0, 3 + 9 * (j - 1), block_mul(At, block_mul(a_power(copies - j), B)));
    place(m, 0, 3 + 9 * copies, Bt);
    for (int i = 1; i <= copies; ++i) {
        const int r = 3 + 9 * (i - 1);
        place(m, r, 0, block_mul(C, a_power(i - 1)));
        for (int j = 1; j < i; ++j)
            place(m, r, 3 + 9 * (j - 1), block_mul(C, block_mul(a_power(i - 1 - j), B)));
        place(m, r, 3 + 9 * (i - 1), D);
    }
    const int r = 3 + 9 * copies;
    place(m, r, 0, block_mul(Ct, a_power(copies)));
    for (int j = 1; j <= copies; ++j)
        place(m, r, 3 + 9 * (j - 1), block_mul(Ct, block_mul(a_power(copies - j), B)));
    place(m, r, 3 + 9 * copies, Dt);
    return m;
}

Int fixed_family_first_row_sum(int g) {
    if (g < 2) fail(ErrorKind::BadGenus, "fixed family needs genus >= 2");
    Int total = int_pow(11, static_cast<unsigned>(g - 1)) + 10 * q_value(g - 1);
    for (int j = 1; j <= g - 1; ++j) total += 20 * q_value(j);
    return total;
}

Int winding_family_first_row_sum(int g, const Int& n) {
    if (g < 3 || n < 2) fail(ErrorKind::BadParameters, "bad winding family parameters");
    Int total = (6 * n + 11) * (int_pow(11, static_cast<unsigned>(g - 2)) + 10 * q_value(g - 2) + 1);
    total += 57 * n + 20;
    for (int j = 1; j <= g - 2; ++j) total += (6 * n + 11) * (20 * q_value(j) + 2);
    return total;
}

}  // namespace pushtrack
