#pragma once

#include <string>

#include "sunn/multiplet.hpp"

/// Deterministic serializers.  Identical graphs render to identical bytes
/// on every run and platform; there is no floating point anywhere.
namespace sunn::emit {

enum class Format { Json, Dot, Tsv, Latex };

struct RenderOptions {
  Format format = Format::Json;
  bool show_degenerate_ks = true;  // style those edges distinctly in DOT
};

/// Canonical JSON document with fixed key order:
/// {rank, algebra, labels, zeroSet, vertices[], edges[], singlets[]}.
std::string to_json(const MultipletGraph& graph);

/// Graphviz digraph, one rank row per two_c value, nodes labelled
/// "{(labels); c}" and edges labelled with the root interval and degree.
std::string to_dot(const MultipletGraph& graph, const RenderOptions& opts = {});

/// Signature table: one row per reflection pair plus one row per singlet.
/// opts.format selects Tsv (default) or Latex.
std::string to_table(const MultipletGraph& graph, const RenderOptions& opts = {
                                                      Format::Tsv, true});

/// Render according to opts.format.
std::string render(const MultipletGraph& graph, const RenderOptions& opts);

/// Halved value in lowest terms: even input prints as an integer,
/// odd input as "p/2".
std::string half_string(Int doubled);

}  // namespace sunn::emit
