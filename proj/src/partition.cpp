#include "jfactor/partition.hpp"

#include <numeric>
#include <sstream>

#include "jfactor/errors.hpp"

namespace jfactor {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw PartitionError("partition needs at least one part");
  }
  const std::int64_t tau = static_cast<std::int64_t>(parts_.size());
  for (std::int64_t k = 1; k <= tau; ++k) {
    if (parts_[static_cast<std::size_t>(k - 1)] < 1) {
      throw NonPositivePart(k, parts_[static_cast<std::size_t>(k - 1)]);
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});

  // m_k = n_{k+1} + ... + n_tau, checked against n_k as we go.
  suffix_.assign(static_cast<std::size_t>(tau > 0 ? tau - 1 : 0), 0);
  std::int64_t running = 0;
  for (std::int64_t k = tau - 1; k >= 1; --k) {
    running += parts_[static_cast<std::size_t>(k)];
    suffix_[static_cast<std::size_t>(k - 1)] = running;
    if (parts_[static_cast<std::size_t>(k - 1)] < running) {
      throw DominanceViolation(k, parts_[static_cast<std::size_t>(k - 1)], running);
    }
  }
}

Partition Partition::from_parts(std::vector<std::int64_t> parts) {
  return Partition(std::move(parts));
}

Partition Partition::from_base(std::int64_t n, std::int64_t base) {
  if (n < 2) throw PartitionError("from_base needs n >= 2");
  if (base < 2) throw PartitionError("from_base needs base >= 2");

  std::vector<std::int64_t> digits;  // least significant first
  std::int64_t rest = n;
  while (rest > 0) {
    digits.push_back(rest % base);
    rest /= base;
  }

  std::vector<std::int64_t> parts;
  std::int64_t scale = 1;
  for (std::size_t e = 1; e < digits.size(); ++e) scale *= base;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, scale /= base) {
    if (*it != 0) parts.push_back(*it * scale);
  }
  return Partition(std::move(parts));
}

Partition Partition::from_text(const std::string& text) {
  std::int64_t declared_n = -1;
  std::string parts_field;

  std::stringstream tokens(text);
  std::string field;
  while (std::getline(tokens, field, ';')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) {
      throw PartitionError("malformed partition text: '" + text + "'");
    }
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "n") {
      declared_n = std::stoll(value);
    } else if (key == "parts") {
      parts_field = value;
    } else {
      throw PartitionError("unknown field '" + key + "' in partition text");
    }
  }
  if (parts_field.empty()) {
    throw PartitionError("partition text lacks parts: '" + text + "'");
  }

  std::vector<std::int64_t> parts;
  std::stringstream values(parts_field);
  std::string item;
  while (std::getline(values, item, ',')) {
    try {
      parts.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw PartitionError("bad part '" + item + "' in partition text");
    }
  }

  Partition p(std::move(parts));
  if (declared_n >= 0 && declared_n != p.n()) {
    throw PartitionError("declared n=" + std::to_string(declared_n) +
                         " does not match part sum " + std::to_string(p.n()));
  }
  return p;
}

std::int64_t Partition::m(std::int64_t k) const {
  if (k == 0) return n_;
  if (k == tau()) return 0;
  return suffix_.at(static_cast<std::size_t>(k - 1));
}

std::string Partition::to_text() const {
  std::string out = "n=" + std::to_string(n_) + ";parts=";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

}  // namespace jfactor
