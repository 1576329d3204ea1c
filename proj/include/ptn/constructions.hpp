#pragma once
// The extremal constructions. Base embeddings and annulus gadgets are data
// (rotation files, shipped under data/ and compiled in); growth is annulus
// composition: the host's outer face and the gadget's inner face are removed
// and their boundary cycles identified, the first coherent cyclic alignment
// (forward direction preferred, then smallest shift) winning. Acceptance is
// by certificate, not by adjacency list.

#include <string>
#include <vector>

#include "json.hpp"
#include "ptn/embedding.hpp"

namespace ptn {

struct BoundaryEmbedding {
  LargeEmbedding emb;
  std::vector<int> boundary;  // outer cycle in face-walk order
};

struct AnnulusGadget {
  LargeEmbedding emb;
  std::vector<int> inner;
  std::vector<int> outer;
};

BoundaryEmbedding theta4_base();
AnnulusGadget theta4_gadget();
BoundaryEmbedding theta5_base();
AnnulusGadget theta5_gadget();

BoundaryEmbedding compose_annulus(const BoundaryEmbedding& host, const AnnulusGadget& gadget);

// k gadget layers on the base; n = 20k+12 resp. 120k+50
BoundaryEmbedding theta4_extremal(int k);
BoundaryEmbedding theta5_extremal(int k);

// two K5-minus-an-edge blocks sharing one vertex: n=9, e=18, theta6-free
Graph fig3_graph();
Graph k5_minus_graph();

struct CertificateCondition {
  std::string name;
  bool pass = true;
  std::string note;
};

struct ExtremalCertificate {
  std::string family;
  int n = 0;
  long long e = 0;
  bool pass = true;
  std::vector<CertificateCondition> conditions;
};

// family: "theta4" (every edge on one 3-face and one 4-face, 5e = 12(n-2)) or
// "theta5" (edge sides {3,3} or {3,5}, each 3-face has exactly two {3,3}
// edges, 2e = 5(n-2)); freeness and connectivity are part of the certificate
ExtremalCertificate check_extremal_certificate(const LargeEmbedding& emb, const std::string& family);

nlohmann::ordered_json certificate_json(const ExtremalCertificate& c);

// embedded copies of the data files, for integrity tests
const char* embedded_rotation_data(const std::string& name);

}  // namespace ptn
