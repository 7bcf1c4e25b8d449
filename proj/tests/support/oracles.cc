#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace cleantables::oracle {

std::vector<DependencyJoinedRow> TwoLeftJoins(const AnnotationSet &a) {
  struct Tok {
    int64_t id, sid, tid;
    std::string word;
    std::optional<std::string> lemma;
  };
  std::vector<Tok> tokens;
  std::set<std::pair<int64_t, int64_t>> seen;
  for (const TokenRow &t : a.token()) {
    if (seen.insert({t.id, t.sid}).second) {
      tokens.push_back({t.id, t.sid, 0, "ROOT", std::string("ROOT")});
    }
    tokens.push_back({t.id, t.sid, t.tid, t.word, t.lemma});
  }
  std::vector<DependencyJoinedRow> out;
  for (const DependencyRow &d : a.dependency()) {
    // A left join keeps unmatched rows with NA and multiplies on duplicate
    // keys; both are checked so a bad fixture cannot pass silently.
    std::vector<const Tok *> gov, dep;
    for (const Tok &t : tokens) {
      if (t.id == d.id && t.sid == d.sid && t.tid == d.tid) gov.push_back(&t);
      if (t.id == d.id && t.sid == d.sid && t.tid == d.tid_target) dep.push_back(&t);
    }
    if (gov.empty()) gov.push_back(nullptr);
    if (dep.empty()) dep.push_back(nullptr);
    for (const Tok *g : gov) {
      for (const Tok *t : dep) {
        DependencyJoinedRow row;
        row.dep = d;
        row.word = g ? g->word : "<NA>";
        row.lemma = g ? g->lemma : std::nullopt;
        row.word_target = t ? t->word : "<NA>";
        row.lemma_target = t ? t->lemma : std::nullopt;
        out.push_back(row);
      }
    }
  }
  return out;
}

DenseTerms Tfidf(const std::vector<std::pair<std::string, std::string>> &pairs,
                 double min_df, double max_df, const std::string &type,
                 const std::string &weight) {
  DenseTerms out;
  std::map<std::string, std::map<std::string, double>> counts;
  for (const auto &[doc, term] : pairs) {
    if (!counts.count(doc)) out.docs.push_back(doc);
    counts[doc][term] += 1.0;
  }
  const double n = static_cast<double>(out.docs.size());
  std::map<std::string, double> df;
  for (const auto &[doc, terms] : counts) {
    for (const auto &[term, c] : terms) df[term] += 1.0;
  }
  std::map<std::string, double> idf;
  for (const auto &[term, f] : df) {
    const double share = f / n;
    if (share >= min_df && share <= max_df) {
      out.vocab.push_back(term);
      idf[term] = std::log(n / f);
    }
  }
  if (type == "idf") {
    out.docs = {"idf"};
    out.values.assign(1, {});
    out.support.assign(1, {});
    for (const std::string &term : out.vocab) {
      out.values[0].push_back(idf[term]);
      out.support[0].push_back(true);
    }
    return out;
  }
  for (const std::string &doc : out.docs) {
    const auto &terms = counts[doc];
    double largest = 0.0;
    for (const std::string &term : out.vocab) {
      auto it = terms.find(term);
      if (it != terms.end()) largest = std::max(largest, it->second);
    }
    std::vector<double> row;
    std::vector<bool> support;
    for (const std::string &term : out.vocab) {
      auto it = terms.find(term);
      const double c = it == terms.end() ? 0.0 : it->second;
      double tf = 0.0;
      if (c > 0) {
        if (weight == "raw") tf = c;
        else if (weight == "lognorm") tf = 1.0 + std::log(c);
        else if (weight == "binary") tf = 1.0;
        else if (weight == "dnorm") tf = 0.5 + 0.5 * c / largest;
      }
      row.push_back(type == "tf" ? tf : tf * idf[term]);
      support.push_back(c > 0);
    }
    out.values.push_back(row);
    out.support.push_back(support);
  }
  return out;
}

std::vector<std::vector<double>> JacobiPcaScores(const DenseMatrix &m, size_t k,
                                                 std::vector<double> *singular_values) {
  const size_t r = m.rows, p = m.cols;
  std::vector<std::vector<double>> x(r, std::vector<double>(p));
  for (size_t j = 0; j < p; ++j) {
    double mean = 0.0;
    for (size_t i = 0; i < r; ++i) mean += m(i, j);
    mean /= static_cast<double>(r);
    for (size_t i = 0; i < r; ++i) x[i][j] = m(i, j) - mean;
  }
  std::vector<std::vector<double>> c(p, std::vector<double>(p, 0.0));
  for (size_t a = 0; a < p; ++a) {
    for (size_t b = 0; b < p; ++b) {
      for (size_t i = 0; i < r; ++i) c[a][b] += x[i][a] * x[i][b];
    }
  }
  std::vector<std::vector<double>> v(p, std::vector<double>(p, 0.0));
  for (size_t a = 0; a < p; ++a) v[a][a] = 1.0;

  double total = 0.0;
  for (size_t a = 0; a < p; ++a) {
    for (size_t b = 0; b < p; ++b) total += c[a][b] * c[a][b];
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (size_t a = 0; a < p; ++a) {
      for (size_t b = a + 1; b < p; ++b) off += c[a][b] * c[a][b];
    }
    if (off <= 1e-32 * total || off == 0.0) break;
    for (size_t a = 0; a < p; ++a) {
      for (size_t b = a + 1; b < p; ++b) {
        if (c[a][b] == 0.0) continue;
        const double theta = (c[b][b] - c[a][a]) / (2.0 * c[a][b]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;
        for (size_t q = 0; q < p; ++q) {
          const double ca = c[q][a], cb = c[q][b];
          c[q][a] = cs * ca - sn * cb;
          c[q][b] = sn * ca + cs * cb;
        }
        for (size_t q = 0; q < p; ++q) {
          const double ca = c[a][q], cb = c[b][q];
          c[a][q] = cs * ca - sn * cb;
          c[b][q] = sn * ca + cs * cb;
        }
        for (size_t q = 0; q < p; ++q) {
          const double va = v[q][a], vb = v[q][b];
          v[q][a] = cs * va - sn * vb;
          v[q][b] = sn * va + cs * vb;
        }
      }
    }
  }
  std::vector<size_t> order(p);
  for (size_t a = 0; a < p; ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return c[a][a] > c[b][b]; });

  std::vector<std::vector<double>> scores;
  if (singular_values) singular_values->clear();
  for (size_t j = 0; j < k; ++j) {
    const size_t col = order[j];
    size_t big = 0;
    for (size_t q = 1; q < p; ++q) {
      if (std::abs(v[q][col]) > std::abs(v[big][col])) big = q;
    }
    const double sign = v[big][col] < 0 ? -1.0 : 1.0;
    std::vector<double> s(r, 0.0);
    for (size_t i = 0; i < r; ++i) {
      for (size_t q = 0; q < p; ++q) s[i] += x[i][q] * v[q][col] * sign;
    }
    scores.push_back(s);
    if (singular_values) singular_values->push_back(std::sqrt(std::max(0.0, c[col][col])));
  }
  return scores;
}

std::vector<double> Quantile7(std::vector<double> x, const std::vector<double> &probs) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  std::vector<double> out;
  for (double p : probs) {
    const double index = 1 + (n - 1) * p;
    const double lo = std::floor(index), hi = std::ceil(index);
    double qs = x[static_cast<size_t>(lo) - 1];
    const double h = index - lo;
    if (index > lo && x[static_cast<size_t>(hi) - 1] != qs) {
      qs = (1 - h) * qs + h * x[static_cast<size_t>(hi) - 1];
    }
    out.push_back(qs);
  }
  return out;
}

}  // namespace cleantables::oracle
