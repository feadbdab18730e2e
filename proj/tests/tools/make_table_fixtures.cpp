// Reference generator for the table-mode transcripts. Reads "n x1..xn" from
// stdin and writes the full difference table plus the verdict line to stdout,
// numbers in shortest round-trip form. Deliberately self-contained: this is
// the second, independent implementation the byte-compare tests rely on.

#include <charconv>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

}  // namespace

int main() {
    int n = 0;
    if (!(std::cin >> n) || n < 0) {
        std::cerr << "expected a nonnegative integer count\n";
        return 1;
    }

    std::vector<double> x(n + 1, 0.0);
    std::vector<double> a(n + 1, 0.0);
    std::vector<double> sigma(n + 1, 1.0);

    for (int i = 1; i <= n; ++i) {
        if (!(std::cin >> x[i])) {
            std::cerr << "expected " << n << " roots\n";
            return 1;
        }
        a[i] = 1 + 2 * x[i] / ((x[i] - 1) * (x[i] - 1));
    }

    for (int k = 1; k <= n; ++k) {
        double sum_j = 0;
        for (int j = 0; j <= k - 1; ++j) {
            double pkj = 0;
            for (int l = 1; l <= n; ++l) pkj += std::pow(a[l], k - j);
            sum_j += std::pow(-1, k - j - 1) * sigma[j] * pkj;
        }
        sigma[k] = sum_j / static_cast<double>(k);
    }

    std::vector<std::vector<double>> c(n + 1, std::vector<double>(n + 1, 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];

    std::vector<double> ro(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) ro[k] = sigma[k] / c[n][k];

    std::vector<std::vector<double>> delta_ro(n + 1, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i <= n; ++i) delta_ro[0][i] = ro[i];
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) delta_ro[i][j] = delta_ro[i - 1][j] - delta_ro[i - 1][j - 1];

    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) std::cout << shortest(delta_ro[i][j]) << " ";
        std::cout << "\n";
    }

    bool is_done = true;
    for (int k = 0; k <= n / 2; ++k)
        if (delta_ro[2 * k][n] < 0) is_done = false;

    std::cout << (is_done ? "[TRUE] The inequality holds" : "[FALSE] The criteria doesn't answer") << "\n";
    return 0;
}
