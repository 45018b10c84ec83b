#include "gts/frame.hpp"

namespace gts {

FrameT3 buildFrameT3(const TNetT3& net) {
  const ControlGrid L = t3LeftNet(net);
  const ControlGrid R = t3RightNet(net);

  FrameT3 f;
  for (int k = 0; k < 3; ++k) {
    f.left[k] = convertCell(L, 1, 1 + k);
    f.right[k] = convertCell(R, 4, 1 + k);
  }

  // bottom row: the two wide cells, subdivided 2:1 and 1:2 so the pieces
  // line up with the terminating line
  const BBPatch bl = convertCell(L, 2, 1);
  const BBPatch br = convertCell(R, 3, 1);
  auto lr = subdivide(bl, Direction::U, 2.0 / 3.0);
  auto rr = subdivide(br, Direction::U, 1.0 / 3.0);
  f.bottom = {lr.first, lr.second, rr.first, rr.second};

  // top row: outer cells as converted, the middle cell split evenly with
  // each half keeping its own side's version
  f.top[0] = convertCell(L, 2, 3);
  f.top[1] = subdivide(convertCell(L, 3, 3), Direction::U, 0.5).first;
  f.top[2] = subdivide(convertCell(R, 2, 3), Direction::U, 0.5).second;
  f.top[3] = convertCell(R, 3, 3);

  // overlap resolution on the hole-facing rows at the junction over the
  // terminating line
  Curve a = f.bottom[1].row(3), b = f.bottom[2].row(3);
  completeJunction(a, b);
  f.bottom[1].setRow(3, a);
  f.bottom[2].setRow(3, b);

  Curve c = f.top[1].row(0), d = f.top[2].row(0);
  completeJunction(c, d);
  f.top[1].setRow(0, c);
  f.top[2].setRow(0, d);

  return f;
}

FrameT3 FrameT3::mirroredX() const {
  FrameT3 m;
  for (int k = 0; k < 3; ++k) {
    m.left[k] = right[k].mirroredU();
    m.right[k] = left[k].mirroredU();
  }
  for (int k = 0; k < 4; ++k) {
    m.bottom[k] = bottom[3 - k].mirroredU();
    m.top[k] = top[3 - k].mirroredU();
  }
  return m;
}

}  // namespace gts
