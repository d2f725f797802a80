// csv_check OUT IN FACTOR TOL: max |out - FACTOR * in| <= TOL * max |FACTOR * in|
// over rows with equal r, using the first value column of each file.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<std::pair<double, double>> read(const char* path) {
  std::ifstream in(path);
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || !(std::isdigit(static_cast<unsigned char>(line[0])) || line[0] == '-')) continue;
    std::stringstream ss(line);
    std::string r, v;
    std::getline(ss, r, ',');
    std::getline(ss, v, ',');
    rows.emplace_back(std::stod(r), std::stod(v));
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 5) {
    std::fprintf(stderr, "usage: csv_check OUT IN FACTOR TOL\n");
    return 2;
  }
  const auto out = read(argv[1]);
  const auto in = read(argv[2]);
  const double factor = std::atof(argv[3]);
  const double tol = std::atof(argv[4]);
  if (out.size() != in.size() || out.empty()) {
    std::fprintf(stderr, "row count mismatch: %zu vs %zu\n", out.size(), in.size());
    return 1;
  }
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].first != in[i].first) {
      std::fprintf(stderr, "node mismatch at row %zu\n", i);
      return 1;
    }
    diff = std::max(diff, std::fabs(out[i].second - factor * in[i].second));
    scale = std::max(scale, std::fabs(factor * in[i].second));
  }
  std::printf("max deviation %.3e relative %.3e\n", diff, diff / scale);
  return diff <= tol * scale ? 0 : 1;
}
