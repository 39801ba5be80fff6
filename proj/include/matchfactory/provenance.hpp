#pragma once

#include <string>

#include "matchfactory/constructions.hpp"

namespace matchfactory {

/// Construction sidecar documents: JSON records of where each gadget copy
/// lives (blocks, marked vertices, glue bundles) and which EdgeId ranges
/// came from added matchings. H-family sidecars round-trip through
/// load_h_family so classifiers can consume constructed files.
std::string provenance_json(const PetersenHost& host);
std::string provenance_json(const QGadget& q);
std::string provenance_json(const Multigraph& t, const BlockEmbedding& emb,
                            int k);
std::string provenance_json(const SFamily& s);
std::string provenance_json(const HFamily& h);

/// Rebuilds an HFamily (graph included) from its sidecar document.
HFamily load_h_family(const std::string& text);

}  // namespace matchfactory
