#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>

#include "genusdp/corpus.hpp"
#include "genusdp/emb_io.hpp"
#include "genusdp/errors.hpp"
#include "genusdp/flag_map.hpp"

using namespace genusdp;

namespace {

EmbeddedGraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_emb(in);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

void check_round_trip(const EmbeddedGraph& g) {
  const EmbeddedGraph h = parse(to_emb(g));
  CHECK(h.vertex_count == g.vertex_count);
  CHECK(h.edge_count() == g.edge_count());
  CHECK(euler_genus(h) == euler_genus(g));
  CHECK(total_face_count(h) == total_face_count(g));
  // The format is canonical after one pass: loops settle on first-seen ends.
  CHECK(to_emb(parse(to_emb(h))) == to_emb(h));
  bool has_loop = false;
  for (int e = 0; e < g.edge_count(); ++e) has_loop |= g.is_loop(e);
  if (!has_loop) CHECK(embeddings_equivalent(g, h));
}

}  // namespace

TEST_CASE("emb text round trips across the corpus") {
  check_round_trip(planar_clique(4));
  check_round_trip(planar_cycle(5));
  check_round_trip(wheel(5));
  check_round_trip(prism());
  check_round_trip(toroidal_k5());
  check_round_trip(klein_grid(3, 3));
  check_round_trip(single_loop(-1));
  check_round_trip(medial(planar_clique(2)));  // two loops on one vertex
  check_round_trip(planar_clique(1));          // isolated vertex
}

TEST_CASE("emb parser tolerates loose whitespace") {
  const EmbeddedGraph g = parse("\n  emb  2   1 \n\n v 0 : 0\nv 1: 0\n  e 0 0 1 +\n");
  CHECK(g.vertex_count == 2);
  CHECK(g.edge_count() == 1);
  CHECK(euler_genus(g) == 0);
}

TEST_CASE("emb parser reports line numbers") {
  CHECK(error_of("v 0: 0\n").find("line 1") != std::string::npos);
  CHECK(error_of("emb 1 1\nv 0: 0 0\ne 0 0 0 *\n").find("line 3") != std::string::npos);
  CHECK(error_of("emb 2 1\nv 0: 0\nv 0: 0\ne 0 0 1 +\n").find("line 3") != std::string::npos);
  CHECK(error_of("emb 2 1\nv 0: 0 0\nv 1:\ne 0 0 1 +\n").find("line 2") != std::string::npos);
  CHECK(error_of("emb 1 1\nv 0: 0\ne 0 0 0 +\n").find("loop") != std::string::npos);
  CHECK(error_of("emb 2 2\nv 0: 0\nv 1: 0\ne 0 0 1 +\ne 1 0 1 +\n").find("edge 1") !=
        std::string::npos);
  CHECK(error_of("emb 2 1\nw 0: 0\n").find("unknown directive") != std::string::npos);
  CHECK(error_of("").find("header") != std::string::npos);
  CHECK(error_of("emb 2 1\nv 0: 1\nv 1: 0\ne 0 0 1 +\n").find("out of range") !=
        std::string::npos);
}

TEST_CASE("loops keep both rotation slots through the format") {
  const EmbeddedGraph g = parse("emb 1 2\nv 0: 0 1 0 1\ne 0 0 0 +\ne 1 0 0 +\n");
  CHECK(g.degree(0) == 4);
  CHECK(euler_genus(g) == 2);  // interleaved handles form a torus
}

TEST_CASE("planar families have their textbook face counts") {
  CHECK(total_face_count(planar_cycle(7)) == 2);
  CHECK(total_face_count(wheel(6)) == 7);
  CHECK(total_face_count(prism()) == 5);
  CHECK(total_face_count(cube()) == 6);
  CHECK(total_face_count(octahedron()) == 8);
  CHECK(total_face_count(planar_grid(3, 4)) == 7);
  CHECK(total_face_count(planar_grid(1, 5)) == 1);
  for (const EmbeddedGraph& g :
       {planar_cycle(7), wheel(6), prism(), cube(), octahedron(), planar_grid(3, 4)}) {
    CHECK(euler_genus(g) == 0);
    CHECK(is_orientable(g));
  }
}

TEST_CASE("wrapped grids land on the torus and the Klein bottle") {
  const EmbeddedGraph t = toroidal_grid(3, 4);
  CHECK(t.vertex_count == 12);
  CHECK(t.edge_count() == 24);
  CHECK(total_face_count(t) == 12);
  CHECK(euler_genus(t) == 2);
  CHECK(is_orientable(t));

  const EmbeddedGraph k = klein_grid(3, 4);
  CHECK(k.edge_count() == 24);
  CHECK(total_face_count(k) == 12);
  CHECK(euler_genus(k) == 2);
  CHECK(!is_orientable(k));
  for (const FaceWalk& w : trace_faces(k).faces) CHECK(w.length() == 4);

  CHECK_THROWS_AS(toroidal_grid(2, 5), InputError);
}

TEST_CASE("complete graphs on the torus") {
  const EmbeddedGraph k5 = toroidal_k5();
  CHECK(k5.edge_count() == 10);
  CHECK(total_face_count(k5) == 5);
  CHECK(euler_genus(k5) == 2);
  CHECK(is_orientable(k5));

  const EmbeddedGraph k7 = toroidal_k7();
  CHECK(k7.edge_count() == 21);
  CHECK(total_face_count(k7) == 14);
  CHECK(euler_genus(k7) == 2);
  CHECK(is_orientable(k7));
  const FaceData fd = trace_faces(k7);
  for (const FaceWalk& w : fd.faces) CHECK(w.length() == 3);
}

TEST_CASE("stacked triangulations are maximal planar and reproducible") {
  const EmbeddedGraph a = stacked_triangulation(12, 7);
  CHECK(a.vertex_count == 12);
  CHECK(a.edge_count() == 3 * 12 - 6);
  CHECK(euler_genus(a) == 0);
  CHECK(is_simple(a.underlying()));
  CHECK(to_emb(a) == to_emb(stacked_triangulation(12, 7)));
  CHECK(to_emb(a) != to_emb(stacked_triangulation(12, 8)));
}
