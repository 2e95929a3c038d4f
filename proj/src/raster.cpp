#include "holomove/raster.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "holomove/errors.hpp"

namespace holomove {

void Window::validate() const {
  const bool finite = std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
                      std::isfinite(y_max);
  if (!finite || !(x_max > x_min) || !(y_max > y_min)) throw input_error("degenerate window");
}

complex Window::pixel_center(int col, int row, int cols, int rows) const noexcept {
  return {x_min + (col + 0.5) * (width() / cols), y_max - (row + 0.5) * (height() / rows)};
}

std::pair<int, int> Window::pixel_of(complex z, int cols, int rows) const noexcept {
  const double fx = (z.real() - x_min) / width() * cols;
  const double fy = (y_max - z.imag()) / height() * rows;
  if (!(fx >= 0.0 && fx < cols && fy >= 0.0 && fy < rows)) return {-1, -1};
  return {static_cast<int>(fx), static_cast<int>(fy)};
}

Window window_around(complex p, complex q, double margin) {
  return {std::min(p.real(), q.real()) - margin, std::max(p.real(), q.real()) + margin,
          std::min(p.imag(), q.imag()) - margin, std::max(p.imag(), q.imag()) + margin};
}

void for_each_tile(int cols, int rows, int workers,
                   const std::function<void(int, int, int, int)>& fn) {
  const int tiles_x = (cols + tile_size - 1) / tile_size;
  const int tiles_y = (rows + tile_size - 1) / tile_size;
  const int total = tiles_x * tiles_y;
  std::atomic<int> next{0};
  auto run = [&] {
    for (int t = next++; t < total; t = next++) {
      const int tx = t % tiles_x;
      const int ty = t / tiles_x;
      fn(tx * tile_size, ty * tile_size, std::min(cols, (tx + 1) * tile_size),
         std::min(rows, (ty + 1) * tile_size));
    }
  };
  const int n = std::clamp(workers, 1, std::max(1, total));
  if (n == 1) {
    run();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k < n; ++k) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

int default_workers() {
  if (const char* env = std::getenv("HOLOMOVE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

template <class Visit>
void flood(std::vector<int>& stack, int cols, int rows, Visit&& visit) {
  while (!stack.empty()) {
    const int k = stack.back();
    stack.pop_back();
    const int c = k % cols;
    const int r = k / cols;
    if (c > 0) visit(k - 1);
    if (c + 1 < cols) visit(k + 1);
    if (r > 0) visit(k - cols);
    if (r + 1 < rows) visit(k + cols);
  }
}

}  // namespace

std::vector<int> label_components(const std::vector<std::uint8_t>& member, int cols, int rows,
                                  int* count) {
  const int n = cols * rows;
  if (static_cast<int>(member.size()) != n) throw input_error("mask size does not match grid");
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  int next = 0;
  for (int k = 0; k < n; ++k) {
    if (!member[k] || id[k] >= 0) continue;
    id[k] = next;
    stack.push_back(k);
    flood(stack, cols, rows, [&](int q) {
      if (member[q] && id[q] < 0) {
        id[q] = next;
        stack.push_back(q);
      }
    });
    ++next;
  }
  if (count) *count = next;
  return id;
}

std::vector<std::uint8_t> reachable_from_border(const std::vector<std::uint8_t>& passable, int cols,
                                                int rows) {
  const int n = cols * rows;
  if (static_cast<int>(passable.size()) != n) throw input_error("mask size does not match grid");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  auto visit = [&](int q) {
    if (passable[q] && !seen[q]) {
      seen[q] = 1;
      stack.push_back(q);
    }
  };
  for (int c = 0; c < cols; ++c) {
    visit(c);
    visit((rows - 1) * cols + c);
  }
  for (int r = 0; r < rows; ++r) {
    visit(r * cols);
    visit(r * cols + cols - 1);
  }
  flood(stack, cols, rows, visit);
  return seen;
}

}  // namespace holomove
