#include "augopt/dataset.hpp"

#include <sstream>
#include <string>

#include "augopt/format.hpp"

namespace augopt {

void validate(const Dataset& data) {
  if (data.labels.size() != data.X.size()) throw Error("Dataset: one label per point required");
  const std::size_t d = data.dim();
  for (const auto& x : data.X) {
    if (x.size() != d) throw Error("Dataset: ragged points");
  }
  for (std::size_t label : data.labels) {
    if (label >= data.centroids.size()) throw Error("Dataset: label out of range");
  }
  for (const auto& c : data.centroids) {
    if (c.size() != d && d != 0) throw Error("Dataset: centroid dimension mismatch");
  }
}

std::size_t nearest_centroid(const std::vector<Vec>& centroids, Divergence metric, ConstVecView x) {
  if (centroids.empty()) throw Error("nearest_centroid: empty centroid list");
  std::size_t best = 0;
  double best_d = divergence(metric, x, centroids[0]);
  for (std::size_t j = 1; j < centroids.size(); ++j) {
    const double d = divergence(metric, x, centroids[j]);
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return best;
}

bool labels_match_nearest(const Dataset& data) {
  for (std::size_t i = 0; i < data.X.size(); ++i) {
    if (nearest_centroid(data.centroids, data.metric, data.X[i]) != data.labels[i]) return false;
  }
  return true;
}

void write_dataset_csv(const Dataset& data, std::ostream& out) {
  validate(data);
  const std::size_t d = data.dim();
  for (std::size_t c = 0; c < d; ++c) out << 'x' << c << ',';
  out << "label\n";
  for (std::size_t i = 0; i < data.X.size(); ++i) {
    for (double v : data.X[i]) out << format_double(v) << ',';
    out << data.labels[i] << '\n';
  }
  if (!out) throw Error("write_dataset_csv: stream failure");
}

Dataset read_dataset_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("read_dataset_csv: missing header");
  std::size_t columns = 1;
  for (char ch : line) columns += ch == ',' ? 1 : 0;
  if (columns < 2 || line.substr(line.rfind(',') + 1) != "label") {
    throw Error("read_dataset_csv: header must be x0,...,label");
  }
  const std::size_t d = columns - 1;
  Dataset data;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    Vec x;
    x.reserve(d);
    for (std::size_t c = 0; c < d; ++c) {
      if (!std::getline(row, cell, ',')) throw Error("read_dataset_csv: short row");
      x.push_back(parse_double(cell));
    }
    if (!std::getline(row, cell)) throw Error("read_dataset_csv: missing label");
    const std::size_t label = static_cast<std::size_t>(std::stoull(cell));
    data.X.push_back(std::move(x));
    data.labels.push_back(label);
  }
  return data;
}

}  // namespace augopt
