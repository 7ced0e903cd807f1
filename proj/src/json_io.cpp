#include "arsss/json_io.hpp"

namespace arsss {

namespace {

template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

Json to_json(const ProbVector& x) {
  Json j;
  j["m"] = x.width();
  j["q"] = x.resolution();
  j["values"] = std::vector<std::int64_t>(x.values().begin(), x.values().end());
  return j;
}

ProbVector prob_vector_from_json(const Json& j) {
  return guarded([&] {
    const auto values = j.at("values").get<std::vector<std::int64_t>>();
    const int m = j.contains("m") ? j.at("m").get<int>() : static_cast<int>(values.size());
    ProbVector x = make_prob_vector(values, m);
    if (j.contains("q") && j.at("q").get<std::int64_t>() != x.resolution()) {
      throw Error(ErrorCode::ParseError, "declared q does not equal the sum of values");
    }
    return x;
  });
}

Json to_json(const ProbSequence& xs) {
  Json j;
  j["m"] = xs.width();
  j["symbols"] = Json::array();
  for (const auto& x : xs) j["symbols"].push_back(to_json(x));
  return j;
}

ProbSequence prob_sequence_from_json(const Json& j) {
  return guarded([&] {
    const Json& list = j.is_array() ? j : j.at("symbols");
    ProbSequence xs;
    for (const auto& item : list) xs.push_back(prob_vector_from_json(item));
    if (j.is_object() && j.contains("m") && !xs.empty() && j.at("m").get<int>() != xs.width()) {
      throw Error(ErrorCode::WidthMismatch, "declared m does not match the symbols");
    }
    return xs;
  });
}

Json to_json(const SharesBundle& b) {
  Json j;
  j["generator_fingerprint"] = b.generator_fingerprint;
  j["m"] = b.m;
  j["q"] = b.q;
  j["L"] = b.L;
  j["k"] = b.k;
  j["block"] = b.block;
  j["indices"] = b.indices;
  j["synthesis_ops"] = b.synthesis_ops;
  j["shares"] = Json::array();
  for (const auto& y : b.shares) j["shares"].push_back(to_json(y));
  if (b.negatives) {
    j["negatives"] = Json::array();
    for (const auto& y : *b.negatives) j["negatives"].push_back(to_json(y));
  }
  return j;
}

SharesBundle bundle_from_json(const Json& j) {
  return guarded([&] {
    SharesBundle b;
    b.generator_fingerprint = j.at("generator_fingerprint").get<std::string>();
    b.m = j.at("m").get<int>();
    b.q = j.at("q").get<std::int64_t>();
    b.L = j.value("L", 0);
    b.k = j.value("k", 0);
    b.block = j.value("block", 1);
    b.synthesis_ops = j.value("synthesis_ops", 0);
    b.shares = prob_sequence_from_json(j.at("shares"));
    if (j.contains("indices")) {
      b.indices = j.at("indices").get<std::vector<int>>();
    } else {
      for (std::size_t i = 1; i * static_cast<std::size_t>(b.block) <= b.shares.size(); ++i) b.indices.push_back(static_cast<int>(i));
    }
    if (j.contains("negatives") && !j.at("negatives").is_null()) b.negatives = prob_sequence_from_json(j.at("negatives"));
    if (!b.shares.empty() && b.shares.width() != b.m) throw Error(ErrorCode::WidthMismatch, "share width differs from m");
    return b;
  });
}

Json parse_json(const std::string& text) {
  return guarded([&] { return Json::parse(text); });
}

}  // namespace arsss
