#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ngs {

/// Dense row-major 2D grid. (u, v) indexes column u of row v.
template <typename T>
class Image {
public:
    Image() = default;
    Image(int width, int height, T fill = T{})
        : width_(width), height_(height),
          data_(static_cast<size_t>(width) * static_cast<size_t>(height), fill) {
        if (width <= 0 || height <= 0)
            throw std::invalid_argument("Image: non-positive dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    bool in_bounds(int u, int v) const {
        return u >= 0 && u < width_ && v >= 0 && v < height_;
    }

    T& at(int u, int v) { return data_[static_cast<size_t>(v) * width_ + u]; }
    const T& at(int u, int v) const { return data_[static_cast<size_t>(v) * width_ + u]; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool same_shape(int w, int h) const { return w == width_ && h == height_; }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

using Mask = Image<std::uint8_t>;

}  // namespace ngs
