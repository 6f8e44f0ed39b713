#include "trop/report.hpp"

namespace trop {

namespace {

Json optional_length(const std::optional<int>& v) {
  if (v) return *v;
  return "inf";
}

std::string witness_label(int s, int t, int k, int m) {
  return cell_label(s, t) + "→" + cell_label(k, m);
}

}  // namespace

std::string cell_label(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

Json matrix_json(const NormalMatrix& a) {
  Json rows = Json::array();
  const std::string text = format_matrix(a);
  std::size_t start = 0;
  for (int i = 0; i < a.order(); ++i) {
    rows.push_back(text.substr(start, static_cast<std::size_t>(a.order())));
    start += static_cast<std::size_t>(a.order()) + 1;
  }
  return rows;
}

Json vector_json(const BorderVector& v) {
  std::string s;
  for (int t = 0; t < v.size; ++t) s.push_back(v.is_zero_at(t) ? '0' : '-');
  return s;
}

Json indicator_json(const IndicatorReport& report) {
  const int n = report.order();
  Json doc;
  doc["n"] = n;
  doc["A"] = matrix_json(report.first);
  doc["B"] = matrix_json(report.second);
  doc["AB"] = matrix_json(report.left);
  doc["BA"] = matrix_json(report.right);
  doc["C"] = matrix_json(report.indicator);
  doc["orthogonal"] = report.indicator.is_all_zero();
  doc["counts"] = {{"prop", report.prop_count},
                   {"cost", report.cost_count},
                   {"gift", report.gift_count},
                   {"duplicates", report.duplicate_count},
                   {"weight", pair_weight(report.first, report.second)}};
  Json cells = Json::array();
  Json costs = Json::array();
  Json gifts = Json::array();
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      const CellClass& c = report.cell(s, t);
      Json cell;
      cell["cell"] = cell_label(s, t);
      cell["class"] = to_string(c.kind);
      if (c.kind == ZeroKind::cost) {
        Json w = Json::array();
        for (int k : c.cost_witnesses) {
          w.push_back(cell_label(k, k));
          costs.push_back(witness_label(s, t, k, k));
        }
        cell["witnesses"] = w;
      } else if (c.kind == ZeroKind::gift) {
        Json w = Json::array();
        for (const auto& [k, m] : c.gift_witnesses) {
          w.push_back(cell_label(k, m));
          gifts.push_back(witness_label(s, t, k, m));
        }
        cell["witnesses"] = w;
      }
      cells.push_back(std::move(cell));
    }
  }
  doc["cost_witnesses"] = std::move(costs);
  doc["gift_witnesses"] = std::move(gifts);
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) {
    const RowType rt = row_type(report, i);
    Json row;
    row["row"] = i + 1;
    switch (rt.kind) {
      case RowKind::cost:
        row["type"] = "cost";
        row["k"] = rt.k + 1;
        break;
      case RowKind::gift:
        row["type"] = "gift";
        row["k"] = rt.k + 1;
        row["m"] = rt.m + 1;
        break;
      case RowKind::other: row["type"] = "other"; break;
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  doc["cells"] = std::move(cells);
  return doc;
}

Json family_json(const FamilySpec& spec) {
  Json doc;
  doc["n"] = spec.order();
  doc["set"] = spec.to_string();
  const NormalMatrix g = spec.generic();
  doc["generic"] = matrix_json(g);
  doc["zeros"] = zero_count(g);
  doc["offdiag_zeros"] = zero_count(g) - spec.order();
  return doc;
}

Json variant_json(const MinimalVariant& v) {
  return Json{{"k", v.k + 1}, {"m", v.m + 1}, {"variant", v.variant}};
}

Json certificate_json(const ThetaCertificate& cert, bool with_timing) {
  Json doc;
  doc["n"] = cert.n;
  doc["kind"] = to_string(cert.kind);
  doc["value"] = cert.value;
  Json completeness;
  completeness["type"] = to_string(cert.completeness);
  if (cert.completeness == Completeness::bounded_proof) completeness["budget"] = cert.budget;
  completeness["proven_lower_bound"] = cert.proven_lower_bound;
  completeness["symmetry_reduced"] = cert.symmetry_reduced;
  doc["completeness"] = std::move(completeness);
  Json stats;
  stats["nodes"] = cert.stats.nodes;
  if (with_timing) stats["elapsed_seconds"] = cert.stats.elapsed_seconds;
  doc["search_stats"] = std::move(stats);
  doc["witness_total"] = cert.witness_total;
  doc["witnesses_truncated"] = cert.witness_total > cert.witnesses.size();
  Json wit = Json::array();
  for (const auto& [a, b] : cert.witnesses) {
    if (cert.kind == ThetaKind::self) {
      wit.push_back(matrix_json(a));
    } else {
      wit.push_back(Json{{"A", matrix_json(a)}, {"B", matrix_json(b)}});
    }
  }
  doc["witnesses"] = std::move(wit);
  return doc;
}

Json theorem_json(const TheoremCheck& check) {
  Json doc;
  doc["n"] = check.n;
  doc["minimum"] = check.minimum;
  doc["family_pairs"] = check.family_pairs;
  doc["forward"] = check.forward;
  if (check.equivalence) {
    doc["minimal_pairs"] = check.minimal_pairs;
    doc["equivalence"] = *check.equivalence;
    auto pairs = [](const std::vector<MatrixPair>& v) {
      Json arr = Json::array();
      for (const auto& [a, b] : v) arr.push_back(Json{{"A", matrix_json(a)}, {"B", matrix_json(b)}});
      return arr;
    };
    doc["minimal_outside_family"] = pairs(check.minimal_outside_family);
    doc["family_not_minimal"] = pairs(check.family_not_minimal);
  } else {
    doc["equivalence"] = nullptr;
  }
  return doc;
}

Json blocks_json(const BorderedBlocks& blocks) {
  return Json{{"inner", matrix_json(blocks.inner)},
              {"v", vector_json(blocks.column)},
              {"w", vector_json(blocks.row)}};
}

Json graph_stats_json(const RelationGraph& graph) {
  Json doc;
  doc["kind"] = to_string(graph.kind());
  doc["n"] = graph.order();
  doc["vertices"] = graph.vertex_count();
  doc["edges"] = graph.edge_count();
  doc["loops"] = graph.loop_count();
  doc["girth"] = optional_length(graph.girth());
  const auto diam = graph.diameter();
  doc["diameter"] = optional_length(diam);
  doc["connected"] = graph.vertex_count() <= 1 || diam.has_value();
  doc["classes"] = graph.class_count();
  return doc;
}

}  // namespace trop
