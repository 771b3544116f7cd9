#!/usr/bin/env python3
# Copyright 2026 The dnnreuse Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the bundled model documents under data/models/.

Every activation-producing op gets its own tensor (relu and batchnorm are
emitted with "in_place": false) so the cumulative activation count covers
each intermediate feature map. Local response normalization has no kind of
its own and is emitted as a non-in-place batchnorm. Caffe-style ceil-mode
pooling is reproduced by picking the smallest symmetric pad whose floor
output matches the ceil output.

Usage: gen_models.py [--out DIR] [--check]
"""

import argparse
import json
import math
import os
import sys


class Builder:
    def __init__(self, name, channels, h, w=None):
        self.name = name
        self.input = {"channels": channels, "h": h, "w": w or h}
        self.layers = [{"name": "data", "kind": "input"}]
        self.shape = {"data": (channels, h, w or h)}
        self.counter = {}
        self.macs = 0

    def _uniq(self, base):
        n = self.counter.get(base, 0)
        self.counter[base] = n + 1
        return base if n == 0 else f"{base}_{n}"

    def _add(self, layer, shape):
        self.layers.append(layer)
        self.shape[layer["name"]] = shape
        return layer["name"]

    def conv(self, x, out, k, s=1, p=None, g=1, name=None, kw=None):
        kh = k
        kw = k if kw is None else kw
        ph, pw = (kh // 2, kw // 2) if p is None else (p if isinstance(p, tuple) else (p, p))
        sh = sw = s
        c, h, w = self.shape[x]
        oh = (h + 2 * ph - kh) // sh + 1
        ow = (w + 2 * pw - kw) // sw + 1
        assert oh >= 1 and ow >= 1, (self.name, name, x, h, w)
        assert c % g == 0 and out % g == 0
        self.macs += (c // g) * out * kh * kw * oh * ow
        layer = {"name": self._uniq(name or "conv"), "kind": "conv", "inputs": [x],
                 "out_channels": out, "kernel_h": kh, "kernel_w": kw,
                 "stride_h": sh, "stride_w": sw, "pad_h": ph, "pad_w": pw}
        if g != 1:
            layer["groups"] = g
        return self._add(layer, (out, oh, ow))

    def bn(self, x, name=None):
        return self._add({"name": self._uniq(name or x + "_bn"), "kind": "batchnorm",
                          "inputs": [x], "in_place": False}, self.shape[x])

    def lrn(self, x):
        return self._add({"name": self._uniq(x + "_norm"), "kind": "batchnorm", "inputs": [x],
                          "in_place": False, "note": "local response normalization"},
                         self.shape[x])

    def relu(self, x, name=None):
        return self._add({"name": self._uniq(name or x + "_relu"), "kind": "relu",
                          "inputs": [x], "in_place": False}, self.shape[x])

    def cbr(self, x, out, k, s=1, p=None, g=1, name=None, kw=None, bn=True, relu=True):
        y = self.conv(x, out, k, s, p, g, name, kw)
        if bn:
            y = self.bn(y)
        if relu:
            y = self.relu(y)
        return y

    def pool(self, x, k, s, p=0, ceil=False, name=None):
        c, h, w = self.shape[x]

        def out(n, pad):
            return (n + 2 * pad - k) // s + 1

        if ceil:
            target_h = -(-(h + 2 * p - k) // s) + 1
            while out(h, p) < target_h:
                p += 1
        oh, ow = out(h, p), out(w, p)
        return self._add({"name": self._uniq(name or "pool"), "kind": "pool", "inputs": [x],
                          "kernel_h": k, "kernel_w": k, "stride_h": s, "stride_w": s,
                          "pad_h": p, "pad_w": p}, (c, oh, ow))

    def gap(self, x, name=None):
        c, h, w = self.shape[x]
        assert h == w
        return self.pool(x, h, 1, 0, name=name or "global_pool")

    def fc(self, x, out, name=None):
        c, h, w = self.shape[x]
        self.macs += c * h * w * out
        return self._add({"name": self._uniq(name or "fc"), "kind": "fc", "inputs": [x],
                          "out_features": out}, (out, 1, 1))

    def add(self, xs, name=None):
        shapes = {self.shape[x] for x in xs}
        assert len(shapes) == 1, (self.name, xs, shapes)
        return self._add({"name": self._uniq(name or "add"), "kind": "add", "inputs": list(xs)},
                         self.shape[xs[0]])

    def concat(self, xs, name=None):
        hw = {self.shape[x][1:] for x in xs}
        assert len(hw) == 1, (self.name, xs, [self.shape[x] for x in xs])
        c = sum(self.shape[x][0] for x in xs)
        return self._add({"name": self._uniq(name or "concat"), "kind": "concat",
                          "inputs": list(xs)}, (c,) + next(iter(hw)))

    def doc(self):
        return {"name": self.name, "input": self.input, "layers": self.layers}


# --- plain stacks ----------------------------------------------------------

def alexnet():
    b = Builder("AlexNet", 3, 227)
    x = b.relu(b.conv("data", 96, 11, 4, 0, name="conv1"))
    x = b.pool(b.lrn(x), 3, 2)
    x = b.relu(b.conv(x, 256, 5, 1, 2, g=2, name="conv2"))
    x = b.pool(b.lrn(x), 3, 2)
    x = b.relu(b.conv(x, 384, 3, 1, 1, name="conv3"))
    x = b.relu(b.conv(x, 384, 3, 1, 1, g=2, name="conv4"))
    x = b.relu(b.conv(x, 256, 3, 1, 1, g=2, name="conv5"))
    x = b.pool(x, 3, 2)
    x = b.relu(b.fc(x, 4096, "fc6"))
    x = b.relu(b.fc(x, 4096, "fc7"))
    b.fc(x, 1000, "fc8")
    return b


def vgg16():
    b = Builder("VGG-16", 3, 224)
    x = "data"
    for stage, (out, reps) in enumerate([(64, 2), (128, 2), (256, 3), (512, 3), (512, 3)], 1):
        for r in range(1, reps + 1):
            x = b.relu(b.conv(x, out, 3, 1, 1, name=f"conv{stage}_{r}"))
        x = b.pool(x, 2, 2, name=f"pool{stage}")
    x = b.relu(b.fc(x, 4096, "fc6"))
    x = b.relu(b.fc(x, 4096, "fc7"))
    b.fc(x, 1000, "fc8")
    return b


def nin():
    b = Builder("NiN", 3, 224)
    x = "data"
    for i, (out, k, s, p) in enumerate([(96, 11, 4, 0), (256, 5, 1, 2), (384, 3, 1, 1),
                                        (1024, 3, 1, 1)], 1):
        x = b.relu(b.conv(x, out, k, s, p, name=f"conv{i}"))
        last = 1000 if i == 4 else out
        x = b.relu(b.conv(x, out, 1, name=f"cccp{2 * i - 1}"))
        x = b.relu(b.conv(x, last, 1, name=f"cccp{2 * i}"))
        if i < 4:
            x = b.pool(x, 3, 2, ceil=True, name=f"pool{i}")
    b.gap(x)
    return b


# --- inception family ------------------------------------------------------

def googlenet():
    b = Builder("GoogLeNet", 3, 224)
    x = b.relu(b.conv("data", 64, 7, 2, 3, name="conv1"))
    x = b.lrn(b.pool(x, 3, 2, ceil=True))
    x = b.relu(b.conv(x, 64, 1, name="conv2_reduce"))
    x = b.relu(b.conv(x, 192, 3, 1, 1, name="conv2"))
    x = b.pool(b.lrn(x), 3, 2, ceil=True)

    def module(x, tag, c1, r3, c3, r5, c5, pp):
        a = b.relu(b.conv(x, c1, 1, name=f"{tag}_1x1"))
        m = b.relu(b.conv(x, r3, 1, name=f"{tag}_3x3_reduce"))
        m = b.relu(b.conv(m, c3, 3, 1, 1, name=f"{tag}_3x3"))
        n = b.relu(b.conv(x, r5, 1, name=f"{tag}_5x5_reduce"))
        n = b.relu(b.conv(n, c5, 5, 1, 2, name=f"{tag}_5x5"))
        q = b.pool(x, 3, 1, 1, name=f"{tag}_pool")
        q = b.relu(b.conv(q, pp, 1, name=f"{tag}_pool_proj"))
        return b.concat([a, m, n, q], f"{tag}_output")

    x = module(x, "inception_3a", 64, 96, 128, 16, 32, 32)
    x = module(x, "inception_3b", 128, 128, 192, 32, 96, 64)
    x = b.pool(x, 3, 2, ceil=True)
    for tag, cfg in [("4a", (192, 96, 208, 16, 48, 64)), ("4b", (160, 112, 224, 24, 64, 64)),
                     ("4c", (128, 128, 256, 24, 64, 64)), ("4d", (112, 144, 288, 32, 64, 64)),
                     ("4e", (256, 160, 320, 32, 128, 128))]:
        x = module(x, "inception_" + tag, *cfg)
    x = b.pool(x, 3, 2, ceil=True)
    x = module(x, "inception_5a", 256, 160, 320, 32, 128, 128)
    x = module(x, "inception_5b", 384, 192, 384, 48, 128, 128)
    x = b.gap(x)
    b.fc(x, 1000, "loss3_classifier")
    return b


def inception_v2():
    # BN-Inception.
    b = Builder("Inception-V2", 3, 231)
    x = b.cbr("data", 64, 7, 2, 3, name="conv1")
    x = b.pool(x, 3, 2, ceil=True)
    x = b.cbr(x, 64, 1, name="conv2_reduce")
    x = b.cbr(x, 192, 3, 1, 1, name="conv2")
    x = b.pool(x, 3, 2, ceil=True)

    def module(x, tag, c1, r3, c3, rd, cd, pp, stride=1):
        branches = []
        if c1:
            branches.append(b.cbr(x, c1, 1, name=f"{tag}_1x1"))
        m = b.cbr(x, r3, 1, name=f"{tag}_3x3_reduce")
        branches.append(b.cbr(m, c3, 3, stride, 1, name=f"{tag}_3x3"))
        n = b.cbr(x, rd, 1, name=f"{tag}_double_3x3_reduce")
        n = b.cbr(n, cd, 3, 1, 1, name=f"{tag}_double_3x3_1")
        branches.append(b.cbr(n, cd, 3, stride, 1, name=f"{tag}_double_3x3_2"))
        if stride == 1:
            q = b.pool(x, 3, 1, 1, name=f"{tag}_pool")
            branches.append(b.cbr(q, pp, 1, name=f"{tag}_pool_proj"))
        else:
            branches.append(b.pool(x, 3, 2, 1, name=f"{tag}_pool"))
        return b.concat(branches, f"{tag}_output")

    x = module(x, "inception_3a", 64, 64, 64, 64, 96, 32)
    x = module(x, "inception_3b", 64, 64, 96, 64, 96, 64)
    x = module(x, "inception_3c", 0, 128, 160, 64, 96, 0, stride=2)
    x = module(x, "inception_4a", 224, 64, 96, 96, 128, 128)
    x = module(x, "inception_4b", 192, 96, 128, 96, 128, 128)
    x = module(x, "inception_4c", 160, 128, 160, 128, 160, 128)
    x = module(x, "inception_4d", 96, 128, 192, 160, 192, 128)
    x = module(x, "inception_4e", 0, 128, 192, 192, 256, 0, stride=2)
    x = module(x, "inception_5a", 352, 192, 320, 160, 224, 128)
    x = module(x, "inception_5b", 352, 192, 320, 192, 224, 128)
    x = b.gap(x)
    b.fc(x, 1000, "fc")
    return b


def _v3_stem(b):
    x = b.cbr("data", 32, 3, 2, 0, name="conv1a")
    x = b.cbr(x, 32, 3, 1, 0, name="conv2a")
    x = b.cbr(x, 64, 3, 1, 1, name="conv2b")
    return x


def inception_v3():
    b = Builder("Inception-V3", 3, 299)
    x = _v3_stem(b)
    x = b.pool(x, 3, 2)
    x = b.cbr(x, 80, 1, name="conv3b")
    x = b.cbr(x, 192, 3, 1, 0, name="conv4a")
    x = b.pool(x, 3, 2)

    def block_a(x, tag, pp):
        a = b.cbr(x, 64, 1, name=f"{tag}_1x1")
        m = b.cbr(x, 48, 1, name=f"{tag}_5x5_reduce")
        m = b.cbr(m, 64, 5, name=f"{tag}_5x5")
        n = b.cbr(x, 64, 1, name=f"{tag}_3x3dbl_reduce")
        n = b.cbr(n, 96, 3, name=f"{tag}_3x3dbl_1")
        n = b.cbr(n, 96, 3, name=f"{tag}_3x3dbl_2")
        q = b.cbr(b.pool(x, 3, 1, 1, name=f"{tag}_pool"), pp, 1, name=f"{tag}_pool_proj")
        return b.concat([a, m, n, q], f"{tag}_output")

    def reduce_a(x, tag):
        a = b.cbr(x, 384, 3, 2, 0, name=f"{tag}_3x3")
        n = b.cbr(x, 64, 1, name=f"{tag}_3x3dbl_reduce")
        n = b.cbr(n, 96, 3, name=f"{tag}_3x3dbl_1")
        n = b.cbr(n, 96, 3, 2, 0, name=f"{tag}_3x3dbl_2")
        return b.concat([a, n, b.pool(x, 3, 2, name=f"{tag}_pool")], f"{tag}_output")

    def block_c(x, tag, c7):
        a = b.cbr(x, 192, 1, name=f"{tag}_1x1")
        m = b.cbr(x, c7, 1, name=f"{tag}_7x7_reduce")
        m = b.cbr(m, c7, 1, kw=7, p=(0, 3), name=f"{tag}_1x7")
        m = b.cbr(m, 192, 7, kw=1, p=(3, 0), name=f"{tag}_7x1")
        n = b.cbr(x, c7, 1, name=f"{tag}_7x7dbl_reduce")
        n = b.cbr(n, c7, 7, kw=1, p=(3, 0), name=f"{tag}_7x7dbl_1")
        n = b.cbr(n, c7, 1, kw=7, p=(0, 3), name=f"{tag}_7x7dbl_2")
        n = b.cbr(n, c7, 7, kw=1, p=(3, 0), name=f"{tag}_7x7dbl_3")
        n = b.cbr(n, 192, 1, kw=7, p=(0, 3), name=f"{tag}_7x7dbl_4")
        q = b.cbr(b.pool(x, 3, 1, 1, name=f"{tag}_pool"), 192, 1, name=f"{tag}_pool_proj")
        return b.concat([a, m, n, q], f"{tag}_output")

    def reduce_b(x, tag):
        a = b.cbr(x, 192, 1, name=f"{tag}_3x3_reduce")
        a = b.cbr(a, 320, 3, 2, 0, name=f"{tag}_3x3")
        n = b.cbr(x, 192, 1, name=f"{tag}_7x7x3_reduce")
        n = b.cbr(n, 192, 1, kw=7, p=(0, 3), name=f"{tag}_1x7")
        n = b.cbr(n, 192, 7, kw=1, p=(3, 0), name=f"{tag}_7x1")
        n = b.cbr(n, 192, 3, 2, 0, name=f"{tag}_7x7x3")
        return b.concat([a, n, b.pool(x, 3, 2, name=f"{tag}_pool")], f"{tag}_output")

    def block_e(x, tag):
        a = b.cbr(x, 320, 1, name=f"{tag}_1x1")
        m = b.cbr(x, 384, 1, name=f"{tag}_3x3_reduce")
        m1 = b.cbr(m, 384, 1, kw=3, p=(0, 1), name=f"{tag}_1x3")
        m2 = b.cbr(m, 384, 3, kw=1, p=(1, 0), name=f"{tag}_3x1")
        n = b.cbr(x, 448, 1, name=f"{tag}_3x3dbl_reduce")
        n = b.cbr(n, 384, 3, name=f"{tag}_3x3dbl")
        n1 = b.cbr(n, 384, 1, kw=3, p=(0, 1), name=f"{tag}_3x3dbl_1x3")
        n2 = b.cbr(n, 384, 3, kw=1, p=(1, 0), name=f"{tag}_3x3dbl_3x1")
        q = b.cbr(b.pool(x, 3, 1, 1, name=f"{tag}_pool"), 192, 1, name=f"{tag}_pool_proj")
        return b.concat([a, m1, m2, n1, n2, q], f"{tag}_output")

    x = block_a(x, "mixed_5b", 32)
    x = block_a(x, "mixed_5c", 64)
    x = block_a(x, "mixed_5d", 64)
    x = reduce_a(x, "mixed_6a")
    for tag, c7 in [("mixed_6b", 128), ("mixed_6c", 160), ("mixed_6d", 160), ("mixed_6e", 192)]:
        x = block_c(x, tag, c7)
    x = reduce_b(x, "mixed_7a")
    x = block_e(x, "mixed_7b")
    x = block_e(x, "mixed_7c")
    b.fc(b.gap(x), 1000, "fc")
    return b


def _v4_stem(b):
    x = _v3_stem(b)
    p = b.pool(x, 3, 2, name="stem_pool1")
    c = b.cbr(x, 96, 3, 2, 0, name="stem_conv1")
    x = b.concat([p, c], "stem_concat1")
    m = b.cbr(x, 64, 1, name="stem_b1_reduce")
    m = b.cbr(m, 96, 3, 1, 0, name="stem_b1_3x3")
    n = b.cbr(x, 64, 1, name="stem_b2_reduce")
    n = b.cbr(n, 64, 1, kw=7, p=(0, 3), name="stem_b2_1x7")
    n = b.cbr(n, 64, 7, kw=1, p=(3, 0), name="stem_b2_7x1")
    n = b.cbr(n, 96, 3, 1, 0, name="stem_b2_3x3")
    x = b.concat([m, n], "stem_concat2")
    c = b.cbr(x, 192, 3, 2, 0, name="stem_conv2")
    p = b.pool(x, 3, 2, name="stem_pool2")
    return b.concat([c, p], "stem_concat3")


def inception_v4():
    b = Builder("Inception-V4", 3, 299)
    x = _v4_stem(b)

    def block_a(x, tag):
        q = b.cbr(b.pool(x, 3, 1, 1, name=f"{tag}_pool"), 96, 1, name=f"{tag}_pool_proj")
        a = b.cbr(x, 96, 1, name=f"{tag}_1x1")
        m = b.cbr(b.cbr(x, 64, 1, name=f"{tag}_3x3_reduce"), 96, 3, name=f"{tag}_3x3")
        n = b.cbr(x, 64, 1, name=f"{tag}_3x3dbl_reduce")
        n = b.cbr(b.cbr(n, 96, 3, name=f"{tag}_3x3dbl_1"), 96, 3, name=f"{tag}_3x3dbl_2")
        return b.concat([q, a, m, n], f"{tag}_output")

    def block_b(x, tag):
        q = b.cbr(b.pool(x, 3, 1, 1, name=f"{tag}_pool"), 128, 1, name=f"{tag}_pool_proj")
        a = b.cbr(x, 384, 1, name=f"{tag}_1x1")
        m = b.cbr(x, 192, 1, name=f"{tag}_7x7_reduce")
        m = b.cbr(m, 224, 1, kw=7, p=(0, 3), name=f"{tag}_1x7")
        m = b.cbr(m, 256, 7, kw=1, p=(3, 0), name=f"{tag}_7x1")
        n = b.cbr(x, 192, 1, name=f"{tag}_7x7dbl_reduce")
        n = b.cbr(n, 192, 1, kw=7, p=(0, 3), name=f"{tag}_7x7dbl_1")
        n = b.cbr(n, 224, 7, kw=1, p=(3, 0), name=f"{tag}_7x7dbl_2")
        n = b.cbr(n, 224, 1, kw=7, p=(0, 3), name=f"{tag}_7x7dbl_3")
        n = b.cbr(n, 256, 7, kw=1, p=(3, 0), name=f"{tag}_7x7dbl_4")
        return b.concat([q, a, m, n], f"{tag}_output")

    def block_c(x, tag):
        q = b.cbr(b.pool(x, 3, 1, 1, name=f"{tag}_pool"), 256, 1, name=f"{tag}_pool_proj")
        a = b.cbr(x, 256, 1, name=f"{tag}_1x1")
        m = b.cbr(x, 384, 1, name=f"{tag}_3x3_reduce")
        m1 = b.cbr(m, 256, 1, kw=3, p=(0, 1), name=f"{tag}_1x3")
        m2 = b.cbr(m, 256, 3, kw=1, p=(1, 0), name=f"{tag}_3x1")
        n = b.cbr(x, 384, 1, name=f"{tag}_3x3dbl_reduce")
        n = b.cbr(n, 448, 1, kw=3, p=(0, 1), name=f"{tag}_3x3dbl_1x3")
        n = b.cbr(n, 512, 3, kw=1, p=(1, 0), name=f"{tag}_3x3dbl_3x1")
        n1 = b.cbr(n, 256, 1, kw=3, p=(0, 1), name=f"{tag}_3x3dbl_out_1x3")
        n2 = b.cbr(n, 256, 3, kw=1, p=(1, 0), name=f"{tag}_3x3dbl_out_3x1")
        return b.concat([q, a, m1, m2, n1, n2], f"{tag}_output")

    for i in range(4):
        x = block_a(x, f"inception_a{i + 1}")
    a = b.cbr(x, 384, 3, 2, 0, name="reduction_a_3x3")
    n = b.cbr(x, 192, 1, name="reduction_a_3x3dbl_reduce")
    n = b.cbr(n, 224, 3, name="reduction_a_3x3dbl_1")
    n = b.cbr(n, 256, 3, 2, 0, name="reduction_a_3x3dbl_2")
    x = b.concat([a, n, b.pool(x, 3, 2, name="reduction_a_pool")], "reduction_a_output")
    for i in range(7):
        x = block_b(x, f"inception_b{i + 1}")
    a = b.cbr(b.cbr(x, 192, 1, name="reduction_b_3x3_reduce"), 192, 3, 2, 0,
              name="reduction_b_3x3")
    n = b.cbr(x, 256, 1, name="reduction_b_7x7_reduce")
    n = b.cbr(n, 256, 1, kw=7, p=(0, 3), name="reduction_b_1x7")
    n = b.cbr(n, 320, 7, kw=1, p=(3, 0), name="reduction_b_7x1")
    n = b.cbr(n, 320, 3, 2, 0, name="reduction_b_3x3_2")
    x = b.concat([a, n, b.pool(x, 3, 2, name="reduction_b_pool")], "reduction_b_output")
    for i in range(3):
        x = block_c(x, f"inception_c{i + 1}")
    b.fc(b.gap(x), 1000, "fc")
    return b


def inception_resnet_v2():
    b = Builder("Inception-ResNet-V2", 3, 299)
    x = _v3_stem(b)
    x = b.pool(x, 3, 2)
    x = b.cbr(x, 80, 1, name="conv3b")
    x = b.cbr(x, 192, 3, 1, 0, name="conv4a")
    x = b.pool(x, 3, 2)
    a = b.cbr(x, 96, 1, name="mixed_5b_1x1")
    m = b.cbr(b.cbr(x, 48, 1, name="mixed_5b_5x5_reduce"), 64, 5, name="mixed_5b_5x5")
    n = b.cbr(x, 64, 1, name="mixed_5b_3x3dbl_reduce")
    n = b.cbr(b.cbr(n, 96, 3, name="mixed_5b_3x3dbl_1"), 96, 3, name="mixed_5b_3x3dbl_2")
    q = b.cbr(b.pool(x, 3, 1, 1, name="mixed_5b_pool"), 64, 1, name="mixed_5b_pool_proj")
    x = b.concat([a, m, n, q], "mixed_5b")

    def residual(x, tag, branches, channels):
        up = b.conv(b.concat(branches, f"{tag}_concat"), channels, 1, name=f"{tag}_up")
        return b.relu(b.add([x, up], f"{tag}_sum"))

    for i in range(10):
        t = f"block35_{i + 1}"
        a = b.cbr(x, 32, 1, name=f"{t}_b0")
        m = b.cbr(b.cbr(x, 32, 1, name=f"{t}_b1_reduce"), 32, 3, name=f"{t}_b1")
        n = b.cbr(x, 32, 1, name=f"{t}_b2_reduce")
        n = b.cbr(b.cbr(n, 48, 3, name=f"{t}_b2_1"), 64, 3, name=f"{t}_b2_2")
        x = residual(x, t, [a, m, n], 320)
    a = b.cbr(x, 384, 3, 2, 0, name="mixed_6a_3x3")
    n = b.cbr(x, 256, 1, name="mixed_6a_reduce")
    n = b.cbr(b.cbr(n, 256, 3, name="mixed_6a_1"), 384, 3, 2, 0, name="mixed_6a_2")
    x = b.concat([a, n, b.pool(x, 3, 2, name="mixed_6a_pool")], "mixed_6a")
    for i in range(20):
        t = f"block17_{i + 1}"
        a = b.cbr(x, 192, 1, name=f"{t}_b0")
        m = b.cbr(x, 128, 1, name=f"{t}_b1_reduce")
        m = b.cbr(m, 160, 1, kw=7, p=(0, 3), name=f"{t}_b1_1x7")
        m = b.cbr(m, 192, 7, kw=1, p=(3, 0), name=f"{t}_b1_7x1")
        x = residual(x, t, [a, m], 1088)
    a = b.cbr(b.cbr(x, 256, 1, name="mixed_7a_b0_reduce"), 384, 3, 2, 0, name="mixed_7a_b0")
    m = b.cbr(b.cbr(x, 256, 1, name="mixed_7a_b1_reduce"), 288, 3, 2, 0, name="mixed_7a_b1")
    n = b.cbr(x, 256, 1, name="mixed_7a_b2_reduce")
    n = b.cbr(b.cbr(n, 288, 3, name="mixed_7a_b2_1"), 320, 3, 2, 0, name="mixed_7a_b2_2")
    x = b.concat([a, m, n, b.pool(x, 3, 2, name="mixed_7a_pool")], "mixed_7a")
    for i in range(10):
        t = f"block8_{i + 1}"
        a = b.cbr(x, 192, 1, name=f"{t}_b0")
        m = b.cbr(x, 192, 1, name=f"{t}_b1_reduce")
        m = b.cbr(m, 224, 1, kw=3, p=(0, 1), name=f"{t}_b1_1x3")
        m = b.cbr(m, 256, 3, kw=1, p=(1, 0), name=f"{t}_b1_3x1")
        x = residual(x, t, [a, m], 2080)
    x = b.cbr(x, 1536, 1, name="conv7b")
    b.fc(b.gap(x), 1000, "fc")
    return b


# --- residual family -------------------------------------------------------

def _resnet(name, blocks, width=64, groups=1, expansion=4, preact=False, base_width=None):
    b = Builder(name, 3, 224)
    x = b.cbr("data", 64, 7, 2, 3, name="conv1")
    x = b.pool(x, 3, 2, 1)
    channels = 64
    for stage, count in enumerate(blocks):
        planes = width * (2 ** stage)
        mid = planes if base_width is None else groups * base_width * (2 ** stage)
        out = planes * expansion
        for i in range(count):
            t = f"res{stage + 2}_{i + 1}"
            stride = 2 if (i == 0 and stage > 0) else 1
            if preact:
                pre = b.relu(b.bn(x, f"{t}_preact_bn"))
                y = b.cbr(pre, mid, 1, stride, 0, name=f"{t}_a")
                y = b.cbr(y, mid, 3, 1, 1, g=groups, name=f"{t}_b")
                y = b.conv(y, out, 1, name=f"{t}_c")
                short = x if (i > 0 or channels == out and stride == 1) else \
                    b.conv(pre, out, 1, stride, 0, name=f"{t}_proj")
            else:
                y = b.cbr(x, mid, 1, 1, 0, name=f"{t}_a")
                y = b.cbr(y, mid, 3, stride, 1, g=groups, name=f"{t}_b")
                y = b.cbr(y, out, 1, name=f"{t}_c", relu=False)
                short = x if i > 0 else \
                    b.cbr(x, out, 1, stride, 0, name=f"{t}_proj", relu=False)
            x = b.add([short, y], f"{t}_sum")
            if not preact:
                x = b.relu(x)
            channels = out
    if preact:
        x = b.relu(b.bn(x, "post_bn"))
    b.fc(b.gap(x), 1000, "fc")
    return b


def resnet50():
    return _resnet("ResNet-50", [3, 4, 6, 3])


def resnet101():
    return _resnet("ResNet-101", [3, 4, 23, 3])


def resnet152():
    return _resnet("ResNet-152", [3, 8, 36, 3])


def resnet101_v2():
    return _resnet("ResNet101-V2", [3, 4, 23, 3], preact=True)


def resnet152_v2():
    return _resnet("ResNet152-V2", [3, 8, 36, 3], preact=True)


def resnext50():
    return _resnet("ResNext50-32x4d", [3, 4, 6, 3], groups=32, base_width=4)


def resnext101():
    return _resnet("ResNext101-32x4d", [3, 4, 23, 3], groups=32, base_width=4)


def _densenet(name, blocks, growth=32, init=64):
    b = Builder(name, 3, 224)
    x = b.cbr("data", init, 7, 2, 3, name="conv1")
    x = b.pool(x, 3, 2, 1)
    channels = init
    for stage, count in enumerate(blocks):
        features = [x]
        for i in range(count):
            t = f"dense{stage + 1}_{i + 1}"
            inp = features[0] if len(features) == 1 else b.concat(features, f"{t}_in")
            y = b.relu(b.bn(inp, f"{t}_bn1"))
            y = b.cbr(y, 4 * growth, 1, name=f"{t}_1x1")
            y = b.conv(y, growth, 3, 1, 1, name=f"{t}_3x3")
            features.append(y)
            channels += growth
        x = b.concat(features, f"dense{stage + 1}_out")
        if stage < len(blocks) - 1:
            t = f"transition{stage + 1}"
            channels //= 2
            y = b.relu(b.bn(x, f"{t}_bn"))
            y = b.conv(y, channels, 1, name=f"{t}_conv")
            x = b.pool(y, 2, 2, name=f"{t}_pool")
    x = b.relu(b.bn(x, "final_bn"))
    b.fc(b.gap(x), 1000, "fc")
    return b


def densenet121():
    return _densenet("DenseNet-121", [6, 12, 24, 16])


def densenet169():
    return _densenet("DenseNet-169", [6, 12, 32, 32])


# --- compact networks ------------------------------------------------------

def _fire(b, x, tag, squeeze, expand):
    s = b.relu(b.conv(x, squeeze, 1, name=f"{tag}_squeeze1x1"))
    e1 = b.relu(b.conv(s, expand, 1, name=f"{tag}_expand1x1"))
    e3 = b.relu(b.conv(s, expand, 3, 1, 1, name=f"{tag}_expand3x3"))
    return b.concat([e1, e3], f"{tag}_concat")


def squeezenet10():
    b = Builder("SqueezeNet-V1.0", 3, 224)
    x = b.relu(b.conv("data", 96, 7, 2, 0, name="conv1"))
    x = b.pool(x, 3, 2, ceil=True)
    for i, (s, e) in enumerate([(16, 64), (16, 64), (32, 128)], 2):
        x = _fire(b, x, f"fire{i}", s, e)
    x = b.pool(x, 3, 2, ceil=True)
    for i, (s, e) in enumerate([(32, 128), (48, 192), (48, 192), (64, 256)], 5):
        x = _fire(b, x, f"fire{i}", s, e)
    x = b.pool(x, 3, 2, ceil=True)
    x = _fire(b, x, "fire9", 64, 256)
    x = b.relu(b.conv(x, 1000, 1, name="conv10"))
    b.gap(x)
    return b


def squeezenet11():
    b = Builder("SqueezeNet-V1.1", 3, 224)
    x = b.relu(b.conv("data", 64, 3, 2, 0, name="conv1"))
    x = b.pool(x, 3, 2, ceil=True)
    for i, (s, e) in enumerate([(16, 64), (16, 64)], 2):
        x = _fire(b, x, f"fire{i}", s, e)
    x = b.pool(x, 3, 2, ceil=True)
    for i, (s, e) in enumerate([(32, 128), (32, 128)], 4):
        x = _fire(b, x, f"fire{i}", s, e)
    x = b.pool(x, 3, 2, ceil=True)
    for i, (s, e) in enumerate([(48, 192), (48, 192), (64, 256), (64, 256)], 6):
        x = _fire(b, x, f"fire{i}", s, e)
    x = b.relu(b.conv(x, 1000, 1, name="conv10"))
    b.gap(x)
    return b


def _sqnxt(name, blocks, groups=1):
    b = Builder(name, 3, 224)
    x = b.cbr("data", 64, 7, 2, 1, name="conv1")
    x = b.pool(x, 3, 2, ceil=True)
    channels = 64
    for stage, count in enumerate(blocks):
        out = 32 * (2 ** stage)
        for i in range(count):
            t = f"sqnxt{stage + 1}_{i + 1}"
            stride = 2 if (i == 0 and stage > 0) else 1
            reduce = 0.5 if stride == 2 else 0.25
            r1 = max(1, int(channels * reduce)) if stride == 2 else out // 2
            r2 = r1 // 2
            y = b.cbr(x, r1, 1, stride, 0, name=f"{t}_reduce1")
            y = b.cbr(y, r2, 1, name=f"{t}_reduce2")
            y = b.cbr(y, r1, 3, kw=1, p=(1, 0), g=groups, name=f"{t}_3x1")
            y = b.cbr(y, r1, 1, kw=3, p=(0, 1), g=groups, name=f"{t}_1x3")
            y = b.cbr(y, out, 1, name=f"{t}_expand", relu=False)
            short = x if (channels == out and stride == 1) else \
                b.cbr(x, out, 1, stride, 0, name=f"{t}_proj", relu=False)
            x = b.relu(b.add([short, y], f"{t}_sum"))
            channels = out
    x = b.cbr(x, 128, 1, name="conv2")
    b.fc(b.gap(x), 1000, "fc")
    return b


def sqnxt23():
    return _sqnxt("1.0-SqNxt-23", [6, 6, 8, 1])


def sqnxt23v5():
    return _sqnxt("1.0-SqNxt-23v5", [2, 4, 14, 1])


def gsqnxt23():
    return _sqnxt("1.0-G-SqNxt-23", [6, 6, 8, 1], groups=2)


def mobilenet_v1():
    b = Builder("MobileNet-V1", 3, 224)
    x = b.cbr("data", 32, 3, 2, 1, name="conv1")
    channels = 32
    cfg = [(64, 1), (128, 2), (128, 1), (256, 2), (256, 1), (512, 2)] + [(512, 1)] * 5 + \
          [(1024, 2), (1024, 1)]
    for i, (out, s) in enumerate(cfg, 2):
        x = b.cbr(x, channels, 3, s, 1, g=channels, name=f"conv{i}_dw")
        x = b.cbr(x, out, 1, name=f"conv{i}_pw")
        channels = out
    b.fc(b.gap(x), 1000, "fc")
    return b


def mobilenet_v2():
    b = Builder("MobileNet-V2", 3, 224)
    x = b.cbr("data", 32, 3, 2, 1, name="conv1")
    channels = 32
    cfg = [(1, 16, 1, 1), (6, 24, 2, 2), (6, 32, 3, 2), (6, 64, 4, 2), (6, 96, 3, 1),
           (6, 160, 3, 2), (6, 320, 1, 1)]
    n = 0
    for t, out, reps, s in cfg:
        for i in range(reps):
            n += 1
            tag = f"block{n}"
            stride = s if i == 0 else 1
            hidden = channels * t
            y = x if t == 1 else b.cbr(x, hidden, 1, name=f"{tag}_expand")
            y = b.cbr(y, hidden, 3, stride, 1, g=hidden, name=f"{tag}_dw")
            y = b.cbr(y, out, 1, name=f"{tag}_project", relu=False)
            x = b.add([x, y], f"{tag}_sum") if (stride == 1 and channels == out) else y
            channels = out
    x = b.cbr(x, 1280, 1, name="conv_last")
    b.fc(b.gap(x), 1000, "fc")
    return b


def xception():
    b = Builder("XceptionNet", 3, 299)
    x = b.cbr("data", 32, 3, 2, 0, name="conv1")
    x = b.cbr(x, 64, 3, 1, 0, name="conv2")
    channels = 64

    def sep(x, cin, out, tag, relu=True):
        y = b.conv(x, cin, 3, 1, 1, g=cin, name=f"{tag}_dw")
        return b.cbr(y, out, 1, name=f"{tag}_pw", relu=relu)

    def entry(x, cin, out, tag, pre_relu=True):
        y = b.relu(x, f"{tag}_pre_relu") if pre_relu else x
        y = sep(y, cin, out, f"{tag}_sep1")
        y = sep(y, out, out, f"{tag}_sep2", relu=False)
        y = b.pool(y, 3, 2, 1, name=f"{tag}_pool")
        short = b.cbr(x, out, 1, 2, 0, name=f"{tag}_skip", relu=False)
        return b.add([short, y], f"{tag}_sum")

    x = entry(x, channels, 128, "block1", pre_relu=False)
    x = entry(x, 128, 256, "block2")
    x = entry(x, 256, 728, "block3")
    for i in range(8):
        t = f"middle{i + 1}"
        y = b.relu(x, f"{t}_relu1")
        y = sep(y, 728, 728, f"{t}_sep1")
        y = sep(y, 728, 728, f"{t}_sep2")
        y = sep(y, 728, 728, f"{t}_sep3", relu=False)
        x = b.add([x, y], f"{t}_sum")
    y = b.relu(x, "exit_relu1")
    y = sep(y, 728, 728, "exit_sep1")
    y = sep(y, 728, 1024, "exit_sep2", relu=False)
    y = b.pool(y, 3, 2, 1, name="exit_pool")
    x = b.add([b.cbr(x, 1024, 1, 2, 0, name="exit_skip", relu=False), y], "exit_sum")
    x = sep(x, 1024, 1536, "exit_sep3")
    x = sep(x, 1536, 2048, "exit_sep4")
    b.fc(b.gap(x), 1000, "fc")
    return b


MODELS = [
    ("alexnet", alexnet), ("vgg16", vgg16), ("nin", nin), ("googlenet", googlenet),
    ("inception_v2", inception_v2), ("inception_v3", inception_v3),
    ("inception_v4", inception_v4), ("resnet50", resnet50), ("resnet101", resnet101),
    ("resnet152", resnet152), ("resnet101_v2", resnet101_v2), ("resnet152_v2", resnet152_v2),
    ("inception_resnet_v2", inception_resnet_v2), ("resnext50_32x4d", resnext50),
    ("resnext101_32x4d", resnext101), ("densenet121", densenet121),
    ("densenet169", densenet169), ("squeezenet_v1_0", squeezenet10),
    ("squeezenet_v1_1", squeezenet11), ("sqnxt23", sqnxt23), ("sqnxt23v5", sqnxt23v5),
    ("g_sqnxt23", gsqnxt23), ("mobilenet_v1", mobilenet_v1), ("mobilenet_v2", mobilenet_v2),
    ("xception", xception),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data",
                                                      "models"))
    parser.add_argument("--check", action="store_true", help="print MAC totals only")
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for slug, fn in MODELS:
        b = fn()
        if args.check:
            print(f"{b.name:22s} {b.macs / 1e6:10.1f} M MACs")
            continue
        with open(os.path.join(args.out, slug + ".json"), "w") as f:
            json.dump(b.doc(), f, indent=1)
            f.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
